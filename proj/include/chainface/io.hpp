#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "chainface/crown.hpp"
#include "chainface/face.hpp"
#include "chainface/poset.hpp"
#include "chainface/scheduler.hpp"

namespace chainface {

// Poset text format: header "p <int>", one "c <x> <y>" line per cover,
// '#' starts a comment.
Poset read_poset(std::istream& in);
Poset read_poset_file(const std::string& path);
std::string write_poset(const Poset& P);

/// Chains render as comma-free digit strings when every label of the poset
/// is a single digit (p <= 9), comma-separated otherwise.
std::string chain_str(const Poset& P, const Chain& c);
std::vector<std::string> family_strs(const Poset& P, const ChainFamily& F);

/// One chain token: "1356" (digits) or "1,3,5,6". Validated as a maximal
/// chain of P.
Chain parse_chain(const Poset& P, const std::string& token);
/// ';'-separated chain tokens.
ChainFamily parse_family(const Poset& P, const std::string& text);
/// Family file: one chain per line, elements comma-separated; '#' comments.
ChainFamily read_family(const Poset& P, std::istream& in);
ChainFamily read_family_file(const Poset& P, const std::string& path);

/// Weights file: one "<element> <numerator>/<denominator>" line per element.
ActivityWeights read_weights(const Poset& P, std::istream& in);
ActivityWeights read_weights_file(const Poset& P, const std::string& path);
std::string write_weights(const Poset& P, const ActivityWeights& w);

nlohmann::json report_json(const Poset& P, const StructureReport& r);
nlohmann::json face_class_json(const FaceClass& fc);
nlohmann::json trace_json(const Poset& P, const std::vector<ChainFamily>& steps);
nlohmann::json lattice_json(const Poset& P, const FaceLattice& L);
nlohmann::json schedule_json(const Poset& P, const ScheduleReport& r);
nlohmann::json grid_flag_json(const Poset& P, const GridFlag& g);

/// DOT rendering of the face-lattice Hasse diagram.
std::string lattice_dot(const Poset& P, const FaceLattice& L);

}  // namespace chainface
