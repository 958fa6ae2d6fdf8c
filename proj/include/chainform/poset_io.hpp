#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "chainform/error.hpp"
#include "chainform/poset.hpp"

namespace chainform {

// Text format, one item per line, '#' starts a comment:
//   elements N
//   cover U V L
// Parsing is whitespace-tolerant; serialization is canonical (covers sorted
// by (U,V)).
inline LabeledPoset parse_poset(std::istream& in) {
    int n_elems = -1;
    std::vector<Cover> covers;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        auto want_int = [&](const char* what) {
            long long v;
            if (!(ls >> v))
                throw ParseError("line " + std::to_string(lineno) + ": expected " +
                                 what);
            return static_cast<int>(v);
        };
        if (kw == "elements") {
            if (n_elems >= 0)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": duplicate 'elements'");
            n_elems = want_int("element count");
        } else if (kw == "cover") {
            if (n_elems < 0)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": 'cover' before 'elements'");
            int u = want_int("lower id");
            int v = want_int("upper id");
            int l = want_int("label");
            covers.push_back({u, v, l});
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown keyword '" +
                             kw + "'");
        }
        std::string extra;
        if (ls >> extra)
            throw ParseError("line " + std::to_string(lineno) + ": trailing token '" +
                             extra + "'");
    }
    if (n_elems < 0) throw ParseError("missing 'elements' line");
    return build_poset(std::move(covers), n_elems);
}

inline LabeledPoset parse_poset(const std::string& text) {
    std::istringstream in(text);
    return parse_poset(in);
}

inline LabeledPoset load_poset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    return parse_poset(in);
}

inline std::string serialize_poset(const LabeledPoset& P) {
    std::ostringstream out;
    out << "elements " << P.num_elements() << "\n";
    for (const Cover& c : P.covers())
        out << "cover " << c.lower << " " << c.upper << " " << c.label << "\n";
    return out.str();
}

inline void save_poset_file(const LabeledPoset& P, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << serialize_poset(P);
}

// Compact one-line form used when a poset appears inside a rendered sum:
// {n=4; 0-1:1; 0-2:2; 1-3:2; 2-3:1}
inline std::string inline_poset(const LabeledPoset& P) {
    std::ostringstream out;
    out << "{n=" << P.num_elements();
    for (const Cover& c : P.covers())
        out << "; " << c.lower << "-" << c.upper << ":" << c.label;
    out << "}";
    return out.str();
}

}  // namespace chainform
