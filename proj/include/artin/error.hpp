#pragma once

#include <stdexcept>
#include <string>

namespace artin {

/// Error kinds raised by the library. Parse-time kinds indicate bad input
/// text; the remaining kinds indicate a domain precondition violation.
enum class Errc {
  // input / parse
  syntax_error,
  duplicate_vertex,
  unknown_vertex,
  duplicate_edge,
  label_out_of_range,
  // domain
  empty_graph,
  disconnected_graph,
  not_spherical,
  not_simply_laced,
  non_divisible,
  degree_out_of_range,
  unsupported_torsion,
  unsupported_type,
};

inline bool is_input_error(Errc c) {
  switch (c) {
    case Errc::syntax_error:
    case Errc::duplicate_vertex:
    case Errc::unknown_vertex:
    case Errc::duplicate_edge:
    case Errc::label_out_of_range:
      return true;
    default:
      return false;
  }
}

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::syntax_error: return "SyntaxError";
    case Errc::duplicate_vertex: return "DuplicateVertex";
    case Errc::unknown_vertex: return "UnknownVertex";
    case Errc::duplicate_edge: return "DuplicateEdge";
    case Errc::label_out_of_range: return "LabelOutOfRange";
    case Errc::empty_graph: return "EmptyGraph";
    case Errc::disconnected_graph: return "DisconnectedGraph";
    case Errc::not_spherical: return "NotSpherical";
    case Errc::not_simply_laced: return "NotSimplyLaced";
    case Errc::non_divisible: return "NonDivisible";
    case Errc::degree_out_of_range: return "DegreeOutOfRange";
    case Errc::unsupported_torsion: return "UnsupportedTorsion";
    case Errc::unsupported_type: return "UnsupportedType";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace artin
