#pragma once

#include <string>

#include "cantor/bases.hpp"
#include "cantor/exact_real.hpp"
#include "cantor/words.hpp"

namespace cantor::test {

inline ExactReal R(const std::string& s) { return parse_real(s).value; }
inline UPWord W(const std::string& s) { return parse_word(s); }
inline FiniteWord F(const std::string& s) { return parse_finite_word(s); }
inline UPBase B(const std::string& s) { return parse_up_base(s); }

inline const std::string kThreePhiPhi = "per:[3,phi,phi]";
inline const std::string kSqrt13 = "per:[(1+sqrt(13))/2,(5+sqrt(13))/6]";
inline const std::string kSqrt6 = "per:[sqrt(6),3,(2+sqrt(6))/3]";
inline const std::string kSqrt13Pre = "pre:[sqrt(13)] per:[(1+sqrt(13))/2,(5+sqrt(13))/6]";
inline const std::string kSqrt10 = "per:[(16+5*sqrt(10))/9,9]";
inline const std::string kPhiSquared = "per:[phi*phi,3+sqrt(5)]";
inline const std::string kPisot = "pre:[3] per:[sqrt(6)*(2+sqrt(6))]";

}  // namespace cantor::test
