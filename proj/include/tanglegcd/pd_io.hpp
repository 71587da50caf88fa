#pragma once

// Line-oriented PD files.
//
//   # comment
//   tangle                      (or: link)
//   boundary NW=0 SW=1 NE=6 SE=7   (tangle only)
//   loops 0                     (optional, default 0)
//   X 3 2 0 1                   (one line per crossing, slots e0 e1 e2 e3)
//
// Edge labels in a file are arbitrary non-negative integers; they are
// renumbered to 0..E-1 on load (first-seen order) before validation.

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "tanglegcd/diagram.hpp"

namespace tanglegcd {

struct PdError : std::runtime_error {
  explicit PdError(int line, const std::string& what)
      : std::runtime_error("pd:" + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

using AnyDiagram = std::variant<TangleDiagram, LinkDiagram>;

namespace detail {

inline std::vector<std::string> pd_tokens(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream in(body);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

inline EdgeId pd_edge(const std::string& tok, int line) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(tok, &used);
  } catch (const std::exception&) {
    throw PdError(line, "expected a non-negative edge label, got '" + tok + "'");
  }
  if (used != tok.size() || v > 0xffffffffUL)
    throw PdError(line, "expected a non-negative edge label, got '" + tok + "'");
  return static_cast<EdgeId>(v);
}

}  // namespace detail

inline AnyDiagram read_pd(std::istream& in) {
  std::string line;
  int lineno = 0;
  bool is_tangle = false;
  bool seen_header = false;
  bool seen_boundary = false;
  int loops = 0;
  std::array<EdgeId, 4> boundary{};
  std::vector<Crossing> crossings;

  std::unordered_map<EdgeId, EdgeId> relabel;
  auto intern = [&](EdgeId raw) {
    auto [it, fresh] = relabel.try_emplace(raw, static_cast<EdgeId>(relabel.size()));
    (void)fresh;
    return it->second;
  };

  while (std::getline(in, line)) {
    ++lineno;
    auto toks = detail::pd_tokens(line);
    if (toks.empty()) continue;
    if (!seen_header) {
      if (toks.size() != 1 || (toks[0] != "tangle" && toks[0] != "link"))
        throw PdError(lineno, "expected header 'tangle' or 'link'");
      is_tangle = (toks[0] == "tangle");
      seen_header = true;
      continue;
    }
    if (toks[0] == "boundary") {
      if (!is_tangle) throw PdError(lineno, "'boundary' is only valid in a tangle file");
      if (seen_boundary) throw PdError(lineno, "duplicate boundary line");
      if (toks.size() != 5) throw PdError(lineno, "boundary needs NW= SW= NE= SE=");
      bool seen[4] = {false, false, false, false};
      for (int i = 1; i <= 4; ++i) {
        auto eq = toks[i].find('=');
        if (eq == std::string::npos) throw PdError(lineno, "bad boundary entry '" + toks[i] + "'");
        std::string key = toks[i].substr(0, eq);
        int corner = key == "NW" ? 0 : key == "SW" ? 1 : key == "NE" ? 2 : key == "SE" ? 3 : -1;
        if (corner < 0) throw PdError(lineno, "unknown corner '" + key + "'");
        if (seen[corner]) throw PdError(lineno, "duplicate corner '" + key + "'");
        seen[corner] = true;
        boundary[corner] = intern(detail::pd_edge(toks[i].substr(eq + 1), lineno));
      }
      seen_boundary = true;
    } else if (toks[0] == "loops") {
      if (toks.size() != 2) throw PdError(lineno, "loops needs one count");
      try {
        loops = std::stoi(toks[1]);
      } catch (const std::exception&) {
        throw PdError(lineno, "bad loop count '" + toks[1] + "'");
      }
      if (loops < 0) throw PdError(lineno, "loop count must be non-negative");
    } else if (toks[0] == "X") {
      if (toks.size() != 5) throw PdError(lineno, "crossing needs four edge labels");
      Crossing x;
      for (int i = 0; i < 4; ++i) x.e[i] = intern(detail::pd_edge(toks[i + 1], lineno));
      crossings.push_back(x);
    } else {
      throw PdError(lineno, "unknown directive '" + toks[0] + "'");
    }
  }
  if (!seen_header) throw PdError(lineno, "empty PD input");

  try {
    if (is_tangle) {
      if (!seen_boundary) throw PdError(lineno, "tangle file is missing its boundary line");
      TangleDiagram t{std::move(crossings), boundary, loops};
      validate(t);
      return t;
    }
    LinkDiagram l{std::move(crossings), loops};
    validate(l);
    return l;
  } catch (const std::invalid_argument& e) {
    throw PdError(lineno, e.what());
  }
}

inline AnyDiagram read_pd(const std::string& text) {
  std::istringstream in(text);
  return read_pd(in);
}

inline TangleDiagram read_tangle_pd(std::istream& in) {
  auto d = read_pd(in);
  if (auto* t = std::get_if<TangleDiagram>(&d)) return *t;
  throw std::invalid_argument("expected a tangle PD file, got a link");
}

inline TangleDiagram read_tangle_pd(const std::string& text) {
  std::istringstream in(text);
  return read_tangle_pd(in);
}

inline LinkDiagram read_link_pd(std::istream& in) {
  auto d = read_pd(in);
  if (auto* l = std::get_if<LinkDiagram>(&d)) return *l;
  throw std::invalid_argument("expected a link PD file, got a tangle");
}

inline LinkDiagram read_link_pd(const std::string& text) {
  std::istringstream in(text);
  return read_link_pd(in);
}

inline void write_pd(std::ostream& out, const TangleDiagram& t) {
  out << "tangle\n";
  out << "boundary NW=" << t.at(Corner::NW) << " SW=" << t.at(Corner::SW)
      << " NE=" << t.at(Corner::NE) << " SE=" << t.at(Corner::SE) << "\n";
  if (t.closed_loops > 0) out << "loops " << t.closed_loops << "\n";
  for (const Crossing& x : t.crossings)
    out << "X " << x.e[0] << " " << x.e[1] << " " << x.e[2] << " " << x.e[3] << "\n";
}

inline void write_pd(std::ostream& out, const LinkDiagram& l) {
  out << "link\n";
  if (l.closed_loops > 0) out << "loops " << l.closed_loops << "\n";
  for (const Crossing& x : l.crossings)
    out << "X " << x.e[0] << " " << x.e[1] << " " << x.e[2] << " " << x.e[3] << "\n";
}

template <typename Diagram>
std::string to_pd_string(const Diagram& d) {
  std::ostringstream out;
  write_pd(out, d);
  return out.str();
}

}  // namespace tanglegcd
