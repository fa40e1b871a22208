#include "adapters/standoff.hpp"

#include <charconv>
#include <cctype>

namespace crest::standoff {
namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t hit = s.find(sep, pos);
    out.push_back(s.substr(pos, hit == std::string_view::npos ? std::string_view::npos : hit - pos));
    if (hit == std::string_view::npos) break;
    pos = hit + 1;
  }
  return out;
}

std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  for (auto w : split(s, ' ')) {
    if (!w.empty()) out.push_back(w);
  }
  return out;
}

bool to_int(std::string_view s, std::int64_t& v) {
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  return ec == std::errc() && p == s.data() + s.size();
}

RoleArg role_arg(std::string_view w) {
  const auto colon = w.find(':');
  if (colon == std::string_view::npos) return {std::string(w), ""};
  return {std::string(w.substr(0, colon)), std::string(w.substr(colon + 1))};
}

}  // namespace

Document parse(std::string_view ann) {
  Document doc;
  std::size_t lineno = 0;
  for (auto line : split(ann, '\n')) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    const auto cols = split(line, '\t');
    const std::string id(cols[0]);
    if (id.empty()) continue;
    const std::string_view body = cols.size() > 1 ? cols[1] : std::string_view{};

    if (id[0] == 'T') {
      TextBound tb;
      tb.id = id;
      tb.text = cols.size() > 2 ? std::string(cols[2]) : std::string();
      const auto space = body.find(' ');
      tb.type = std::string(body.substr(0, space));
      if (space == std::string_view::npos) {
        tb.well_formed = false;
      } else {
        for (auto frag : split(body.substr(space + 1), ';')) {
          const auto w = words(frag);
          text::Range r;
          if (w.size() != 2 || !to_int(w[0], r.start) || !to_int(w[1], r.end)) {
            tb.well_formed = false;
            break;
          }
          tb.fragments.push_back(r);
        }
      }
      doc.spans[id] = std::move(tb);
    } else if (id[0] == 'E') {
      Event ev;
      ev.id = id;
      ev.line = lineno;
      auto w = words(body);
      if (!w.empty()) {
        auto head = role_arg(w[0]);
        ev.type = head.first;
        ev.trigger = head.second;
        for (std::size_t i = 1; i < w.size(); ++i) ev.args.push_back(role_arg(w[i]));
      }
      doc.events.push_back(std::move(ev));
    } else if (id[0] == 'R') {
      Relation rel;
      rel.id = id;
      rel.line = lineno;
      auto w = words(body);
      if (!w.empty()) {
        rel.type = std::string(w[0]);
        for (std::size_t i = 1; i < w.size(); ++i) rel.args.push_back(role_arg(w[i]));
      }
      doc.relations.push_back(std::move(rel));
    }
  }
  return doc;
}

bool matches_text(const TextBound& span, const std::u32string& txt) {
  if (!span.well_formed || span.fragments.empty()) return false;
  std::u32string joined;
  for (const auto& r : span.fragments) {
    if (r.start < 0 || r.end < r.start || r.end > static_cast<std::int64_t>(txt.size())) return false;
    if (!joined.empty()) joined.push_back(U' ');
    joined.append(txt, static_cast<std::size_t>(r.start), static_cast<std::size_t>(r.end - r.start));
  }
  return joined == text::to_u32(span.text);
}

std::optional<std::string> find_role(const std::vector<RoleArg>& args, std::string_view role) {
  for (const auto& [r, id] : args) {
    if (r == role) return id;
  }
  for (const auto& [r, id] : args) {
    if (r.size() > role.size() && r.compare(0, role.size(), role) == 0 &&
        std::isdigit(static_cast<unsigned char>(r[role.size()]))) {
      return id;
    }
  }
  return std::nullopt;
}

}  // namespace crest::standoff
