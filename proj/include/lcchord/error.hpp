#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lcchord {

enum class Errc {
  vertex_out_of_range,
  self_loop,
  empty_graph,
  invalid_cycle,
  invalid_forest,
  graph6_bad_char,
  graph6_truncated,
  graph6_trailing,
  graph6_padding,
  graph6_too_large,
  bad_edge_list,
  too_large,
  precondition,
  bad_witness,
  not_a_bond,
  disconnected,
  bad_range,
  bad_argument,
};

inline std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::vertex_out_of_range: return "vertex_out_of_range";
    case Errc::self_loop: return "self_loop";
    case Errc::empty_graph: return "empty_graph";
    case Errc::invalid_cycle: return "invalid_cycle";
    case Errc::invalid_forest: return "invalid_forest";
    case Errc::graph6_bad_char: return "graph6_bad_char";
    case Errc::graph6_truncated: return "graph6_truncated";
    case Errc::graph6_trailing: return "graph6_trailing";
    case Errc::graph6_padding: return "graph6_padding";
    case Errc::graph6_too_large: return "graph6_too_large";
    case Errc::bad_edge_list: return "bad_edge_list";
    case Errc::too_large: return "too_large";
    case Errc::precondition: return "precondition";
    case Errc::bad_witness: return "bad_witness";
    case Errc::not_a_bond: return "not_a_bond";
    case Errc::disconnected: return "disconnected";
    case Errc::bad_range: return "bad_range";
    case Errc::bad_argument: return "bad_argument";
  }
  return "unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (and tests) can tell error paths apart without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace lcchord
