#include "chainface/io.hpp"

#include <fstream>
#include <sstream>

namespace chainface {

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  std::string s = pos == std::string::npos ? line : line.substr(0, pos);
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  return in;
}

}  // namespace

Poset read_poset(std::istream& in) {
  std::string line;
  int p = -1;
  std::vector<std::pair<int, int>> covers;
  while (std::getline(in, line)) {
    std::string s = strip_comment(line);
    if (s.empty()) continue;
    std::istringstream row(s);
    std::string tag;
    row >> tag;
    if (tag == "p") {
      if (p != -1) throw ParseError("duplicate size header");
      if (!(row >> p) || p < 1) throw ParseError("bad size header");
    } else if (tag == "c") {
      int x, y;
      if (p == -1) throw ParseError("cover before size header");
      if (!(row >> x >> y)) throw ParseError("bad cover line: " + s);
      covers.emplace_back(x, y);
    } else {
      throw ParseError("unknown line: " + s);
    }
  }
  if (p == -1) throw ParseError("missing size header");
  return build_poset(p, covers);
}

Poset read_poset_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_poset(in);
}

std::string write_poset(const Poset& P) {
  std::ostringstream out;
  out << "p " << P.size() << "\n";
  for (auto [x, y] : P.covers()) out << "c " << x << " " << y << "\n";
  return out.str();
}

std::string chain_str(const Poset& P, const Chain& c) {
  std::ostringstream out;
  bool digits = P.size() <= 9;
  for (std::size_t i = 0; i < c.elems.size(); ++i) {
    if (i && !digits) out << ",";
    out << c.elems[i];
  }
  return out.str();
}

std::vector<std::string> family_strs(const Poset& P, const ChainFamily& F) {
  std::vector<std::string> out;
  for (const Chain& c : F) out.push_back(chain_str(P, c));
  return out;
}

Chain parse_chain(const Poset& P, const std::string& token) {
  std::vector<int> elems;
  if (token.find(',') != std::string::npos) {
    std::istringstream in(token);
    std::string part;
    while (std::getline(in, part, ',')) {
      try {
        elems.push_back(std::stoi(part));
      } catch (const std::exception&) {
        throw ParseError("bad chain element: '" + part + "'");
      }
    }
  } else {
    for (char ch : token) {
      if (ch < '1' || ch > '9')
        throw ParseError("bad chain token: '" + token + "'");
      elems.push_back(ch - '0');
    }
  }
  if (elems.empty()) throw ParseError("empty chain token");
  Chain c;
  try {
    c = chain_from_set(P, elems);
  } catch (const WitnessError&) {
    throw ParseError("not a chain of the poset: '" + token + "'");
  }
  if (!is_maximal_chain(P, c))
    throw ParseError("not a maximal chain: '" + token + "'");
  return c;
}

ChainFamily parse_family(const Poset& P, const std::string& text) {
  std::vector<Chain> cs;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ';')) {
    std::string s = strip_comment(token);
    if (!s.empty()) cs.push_back(parse_chain(P, s));
  }
  if (cs.empty()) throw ParseError("empty chain family");
  return ChainFamily(std::move(cs));
}

ChainFamily read_family(const Poset& P, std::istream& in) {
  std::vector<Chain> cs;
  std::string line;
  while (std::getline(in, line)) {
    std::string s = strip_comment(line);
    if (!s.empty()) cs.push_back(parse_chain(P, s));
  }
  if (cs.empty()) throw ParseError("empty chain family");
  return ChainFamily(std::move(cs));
}

ChainFamily read_family_file(const Poset& P, const std::string& path) {
  auto in = open_or_throw(path);
  return read_family(P, in);
}

ActivityWeights read_weights(const Poset& P, std::istream& in) {
  std::map<int, Rat> values;
  std::string line;
  while (std::getline(in, line)) {
    std::string s = strip_comment(line);
    if (s.empty()) continue;
    std::istringstream row(s);
    int x;
    std::string frac;
    if (!(row >> x >> frac)) throw ParseError("bad weight line: " + s);
    values[x] = rat_parse(frac);
  }
  return ActivityWeights(P, values);
}

ActivityWeights read_weights_file(const Poset& P, const std::string& path) {
  auto in = open_or_throw(path);
  return read_weights(P, in);
}

std::string write_weights(const Poset& P, const ActivityWeights& w) {
  std::ostringstream out;
  for (int x = 1; x <= P.size(); ++x)
    out << x << " " << rat_frac_str(w.at(x)) << "\n";
  return out.str();
}

nlohmann::json report_json(const Poset& P, const StructureReport& r) {
  nlohmann::json j;
  j["verdict"] = verdict_name(r.verdict);
  j["crowns"] = nlohmann::json::array();
  for (const auto& fc : r.crowns) {
    nlohmann::json c;
    c["rho"] = fc.crown.rho;
    c["alphas"] = fc.crown.alphas;
    c["betas"] = fc.crown.betas;
    c["complete"] = fc.complete;
    c["missing"] = family_strs(P, ChainFamily(fc.missing));
    j["crowns"].push_back(std::move(c));
  }
  j["stars"] = nlohmann::json::array();
  for (const auto& fs : r.stars) {
    nlohmann::json s;
    s["a1"] = fs.star.a1;
    s["b1"] = fs.star.b1;
    s["a2"] = fs.star.a2;
    s["b2"] = fs.star.b2;
    s["gammas"] = fs.star.gammas();
    s["complete"] = fs.complete;
    s["missing"] = family_strs(P, ChainFamily(fs.missing));
    j["stars"].push_back(std::move(s));
  }
  return j;
}

nlohmann::json face_class_json(const FaceClass& fc) {
  nlohmann::json j;
  j["tag"] = face_tag_name(fc.tag);
  if (fc.dim) j["dim"] = *fc.dim;
  return j;
}

nlohmann::json trace_json(const Poset& P, const std::vector<ChainFamily>& steps) {
  nlohmann::json j;
  j["steps"] = nlohmann::json::array();
  for (const auto& f : steps) j["steps"].push_back(family_strs(P, f));
  return j;
}

nlohmann::json lattice_json(const Poset& P, const FaceLattice& L) {
  nlohmann::json j;
  j["faces"] = nlohmann::json::array();
  for (std::size_t i = 0; i < L.faces.size(); ++i) {
    nlohmann::json f;
    f["chains"] = family_strs(P, L.faces[i]);
    f["dim"] = L.dims[i];
    j["faces"].push_back(std::move(f));
  }
  j["covers"] = nlohmann::json::array();
  for (auto [a, b] : L.covers) j["covers"].push_back({a, b});
  return j;
}

nlohmann::json schedule_json(const Poset& P, const ScheduleReport& r) {
  nlohmann::json j;
  j["eft"] = rat_str(r.eft);
  j["critical"] = family_strs(P, r.critical);
  nlohmann::json totals;
  for (const auto& [c, t] : r.totals) totals[chain_str(P, c)] = rat_str(t);
  j["totals"] = std::move(totals);
  return j;
}

nlohmann::json grid_flag_json(const Poset& P, const GridFlag& g) {
  nlohmann::json j;
  j["m"] = g.m;
  j["n"] = g.n;
  j["dim"] = g.dim;
  j["stages"] = nlohmann::json::array();
  for (const auto& st : g.stages) {
    nlohmann::json s;
    s["x"] = st.x;
    s["y"] = st.y;
    s["s_set"] = st.s_set;
    s["family"] = family_strs(P, st.family);
    j["stages"].push_back(std::move(s));
  }
  return j;
}

std::string lattice_dot(const Poset& P, const FaceLattice& L) {
  std::ostringstream out;
  out << "digraph face_lattice {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < L.faces.size(); ++i) {
    std::string label;
    if (L.faces[i].empty())
      label = "{}";
    else {
      for (const auto& s : family_strs(P, L.faces[i])) {
        if (!label.empty()) label += " ";
        label += s;
      }
    }
    out << "  f" << i << " [label=\"" << label << "\\ndim " << L.dims[i]
        << "\"];\n";
  }
  for (auto [a, b] : L.covers) out << "  f" << a << " -> f" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace chainface
