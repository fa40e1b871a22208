// Causal-TimeBank: TimeML with inline EVENT and SIGNAL/C-SIGNAL tags,
// MAKEINSTANCE elements mapping instance ids to events, and CLINK elements
// whose eventInstanceID is the cause and relatedToEventInstance the effect.
// Only CLINKs are candidates; TLINKs and other annotation layers are not
// read.

#include <algorithm>
#include <map>

#include "adapters/common.hpp"
#include "adapters/xml_dom.hpp"
#include "crest/adapters.hpp"

namespace crest {

ParseResult parse_causal_timebank(std::string_view xml_text, std::string_view doc_id) {
  using detail::make_id;
  using detail::skip;

  const auto root = xml::parse(xml_text);
  const xml::Node* body = root->first("TEXT");
  if (body == nullptr) body = root.get();
  const auto flat = xml::flatten(*body);
  ParseResult result;

  std::map<std::string, Range> events;
  for (const auto* ev : body->descendants("EVENT")) events[ev->attr("eid")] = flat.ranges.at(ev);
  std::map<std::string, Range> signals;
  for (const auto* sig : body->descendants("SIGNAL")) signals[sig->attr("sid")] = flat.ranges.at(sig);
  for (const auto* sig : body->descendants("C-SIGNAL")) {
    signals[sig->attr("cid")] = flat.ranges.at(sig);
  }
  std::map<std::string, std::string> instances;
  for (const auto* mi : root->descendants("MAKEINSTANCE")) {
    instances[mi->attr("eiid")] = mi->attr("eventID");
  }
  std::vector<Range> sentences;
  for (const auto* s : body->descendants("s")) sentences.push_back(flat.ranges.at(s));

  auto event_of = [&](const std::string& eiid) -> const Range* {
    auto inst = instances.find(eiid);
    const std::string eid = inst == instances.end() ? eiid : inst->second;
    auto it = events.find(eid);
    return it == events.end() ? nullptr : &it->second;
  };

  std::size_t ordinal = 0;
  for (const auto* link : root->descendants("CLINK")) {
    ++ordinal;
    ++result.candidates;
    const std::string id = make_id(doc_id, link->attr("lid", "clink" + std::to_string(ordinal)));
    const Range* cause = event_of(link->attr("eventInstanceID"));
    const Range* effect = event_of(link->attr("relatedToEventInstance"));
    if (cause == nullptr || effect == nullptr) {
      result.skips.push_back(skip(id, SkipReason::malformed, "dangling event instance"));
      continue;
    }
    std::vector<Range> signal;
    std::string sid = link->attr("c-signalID");
    if (sid.empty()) sid = link->attr("signalID");
    if (!sid.empty()) {
      auto it = signals.find(sid);
      if (it == signals.end()) {
        result.skips.push_back(skip(id, SkipReason::malformed, "dangling signal " + sid));
        continue;
      }
      signal.push_back(it->second);
    }

    const std::vector<Range> span1{*cause};
    const std::vector<Range> span2{*effect};
    CrestRelation rel;
    if (sentences.empty()) {
      rel = detail::sentence_relation(flat.text, span1, span2, signal);
    } else {
      Range window = detail::cover({&span1, &span2, &signal});
      const Range core = window;
      for (const auto& s : sentences) {
        if (s.end > core.start && s.start < core.end) {
          window.start = std::min(window.start, s.start);
          window.end = std::max(window.end, s.end);
        }
      }
      rel = detail::windowed_relation(flat.text, window, span1, span2, signal);
    }
    rel.original_id = id;
    rel.label = kCausal;
    rel.direction = kSpan1CausesSpan2;
    result.relations.push_back(std::move(rel));
  }
  return result;
}

}  // namespace crest
