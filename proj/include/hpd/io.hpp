#pragma once

// Instance file parsing and serialization.
//
// Three formats, auto-detected:
//   * json            — first non-space character is '{':
//                       {"mu": int, "faces": [[int, ...], ...]}   -> Hypergraph
//                       {"vars": [str], "gens": [[str, ...], ...]} -> MonomialIdeal
//   * hypergraph-text — first data line is digits and commas only:
//                       one face per line, comma-separated vertex numbers,
//                       '#' starts a comment.
//   * ideal-text      — anything else: one generator per line,
//                       whitespace-separated variable names.
//
// Vertex numbers are 1-based externally (pass zero_based=true for 0-based
// input); internally everything is dense and 0-based. Input numbering is kept
// as the vertex labels so reductions can report back in the user's names.

#include <stdexcept>
#include <string>
#include <variant>

#include "hpd/core.hpp"

namespace hpd {

/// Parse failure with a 1-based location (0 means "whole file"/"whole line").
struct ParseError : std::runtime_error {
    int line = 0;
    int column = 0;
    ParseError(const std::string& msg, int line_ = 0, int column_ = 0)
        : std::runtime_error(line_ > 0
                                 ? (std::to_string(line_) + ":" +
                                    std::to_string(column_) + ": " + msg)
                                 : msg),
          line(line_),
          column(column_) {}
};

using Instance = std::variant<Hypergraph, MonomialIdeal>;

/// Parses instance text in any of the three formats.
Instance parse_instance(const std::string& text, bool zero_based = false);

/// Reads and parses a file; a missing/unreadable file is a ParseError.
Instance parse_file(const std::string& path, bool zero_based = false);

/// The hypergraph of an instance (identity, or the dual of an ideal).
Hypergraph instance_hypergraph(const Instance& inst);

/// The ideal of an instance (identity, or the standard ideal of a hypergraph).
MonomialIdeal instance_ideal(const Instance& inst);

/// hypergraph-text: one face per line, comma-separated 1-based vertices.
std::string to_text(const Hypergraph& h);
/// ideal-text: one generator per line, whitespace-separated variable names.
std::string to_text(const MonomialIdeal& ideal);
/// {"mu": .., "faces": [[..]]} with 1-based vertices, one line.
std::string to_json(const Hypergraph& h);
/// {"vars": [..], "gens": [[..]]}, one line.
std::string to_json(const MonomialIdeal& ideal);

}  // namespace hpd
