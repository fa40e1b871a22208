#pragma once

// brat standoff annotation lines:
//   T<n>\t<Type> <start> <end>[;<start> <end>...]\t<text>
//   E<n>\t<Type>:<trigger T> <Role>:<T> ...
//   R<n>\t<Type> <Role>:<T> <Role>:<T>
// Attribute (A), note (#), normalization (N) and equivalence (*) lines are
// ignored.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "crest/text.hpp"

namespace crest::standoff {

struct TextBound {
  std::string id;
  std::string type;
  std::vector<text::Range> fragments;
  std::string text;
  bool well_formed = true;
};

using RoleArg = std::pair<std::string, std::string>;  // role, T id

struct Event {
  std::string id;
  std::string type;
  std::string trigger;  // may be empty
  std::vector<RoleArg> args;
  std::size_t line = 0;
};

struct Relation {
  std::string id;
  std::string type;
  std::vector<RoleArg> args;
  std::size_t line = 0;
};

struct Document {
  std::map<std::string, TextBound> spans;
  std::vector<Event> events;
  std::vector<Relation> relations;
};

Document parse(std::string_view ann);

// True if the fragments are in range and their slices, joined by single
// spaces, equal the annotated text.
bool matches_text(const TextBound& span, const std::u32string& txt);

// Finds the first argument with this role (case-sensitive). Role names with a
// trailing index ("Cause2") are matched by prefix.
std::optional<std::string> find_role(const std::vector<RoleArg>& args, std::string_view role);

}  // namespace crest::standoff
