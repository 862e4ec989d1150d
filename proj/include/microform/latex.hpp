#ifndef MICROFORM_LATEX_HPP
#define MICROFORM_LATEX_HPP

#include <string>

#include "microform/expand.hpp"

namespace microform {

// Symbolic LaTeX for one term: coefficient, loop factor, black tensor
// factors, differentiated white factors. Dummy indices named a, b, c, ... in
// canonical edge order; free indices continue the alphabet.
std::string latex_term(const Term& t, Expansion::Op op, const std::string& target_symbol,
                       const std::string& source_symbol);

// Full expansion joined with " + ".
std::string latex_expansion(const Expansion& e, const std::string& target_symbol = "g",
                            const std::string& source_symbol = "S");

// Plain-text rendering of the same structure.
std::string text_term(const Term& t, Expansion::Op op, const std::string& target_symbol,
                      const std::string& source_symbol);
std::string text_expansion(const Expansion& e, const std::string& target_symbol = "g",
                           const std::string& source_symbol = "S");

} // namespace microform

#endif
