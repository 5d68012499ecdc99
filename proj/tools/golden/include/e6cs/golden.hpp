#pragma once

#include "e6cs/lattice.hpp"
#include "e6cs/polynomial.hpp"
#include "e6cs/rational.hpp"
#include "e6cs/tensor.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace e6cs::golden {

struct CharacterEntry {
    std::string source;  ///< "second-order" or "appendix-a"
    Weight weight{};
    Polynomial poly;
};

struct SeriesEntry {
    std::string source;  ///< "quadratic" or "cubic"
    std::vector<Weight> factors;
    std::vector<SeriesTerm> terms;
};

struct DimensionEntry {
    std::string source;  ///< "fundamental" or "candidates"
    Weight weight{};
    Integer dim;
};

struct Erratum {
    std::string kind;  ///< "dimension" or "series"
    std::string key;
    std::string printed;
    std::string corrected;
};

// Parsers for the line formats. Throw ParseError with the line number.
std::vector<CharacterEntry> parse_characters(std::string_view text);
std::vector<SeriesEntry> parse_series(std::string_view text);
std::vector<DimensionEntry> parse_dimensions(std::string_view text);
std::vector<Erratum> parse_errata(std::string_view text);

// The data files compiled into the binary, exactly as printed.
std::vector<CharacterEntry> characters();
std::vector<SeriesEntry> series();
std::vector<DimensionEntry> dimensions();
std::vector<Erratum> errata();

std::string series_key(const std::vector<Weight>& factors);

/// Return the number of errata applied; throws ParseError if an erratum does
/// not match the data it is meant to correct.
int apply_errata(std::vector<SeriesEntry>& s, const std::vector<Erratum>& e);
int apply_errata(std::vector<DimensionEntry>& d, const std::vector<Erratum>& e);

/// Product of the factors' characters as a monomial exponent, when every
/// factor is fundamental.
Exponent monomial_of(const std::vector<Weight>& factors);

}  // namespace e6cs::golden
