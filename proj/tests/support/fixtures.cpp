#include "fixtures.hpp"

#include "trop/error.hpp"

namespace fixtures {

const char* const kOutsideA[4] = {
    "0--\n-0-\n--0",
    "0--0\n-00-\n-00-\n0--0",
    "0--0-\n-00-0\n-00-0\n0--0-\n-00-0",
    "0--0--\n-0--0-\n--0--0\n0--0--\n-0--0-\n--0--0",
};
const char* const kOutsideB[4] = {
    "000\n000\n000",
    "0-0-\n-0-0\n0-0-\n-0-0",
    "0-0--\n-0-0-\n0-0--\n-0-00\n---00",
    "0---00\n-0-0-0\n--000-\n-000--\n0-0-0-\n00---0",
};

const char* const kFamilyA[4] = {
    "0--0--\n-0-0--\n000000\n---0--\n---00-\n---0-0",
    "0--0--\n-0-0--\n000-00\n--00--\n---00-\n---0-0",
    "0--0--\n-0-0--\n000-00\n---0--\n---00-\n---0-0",
    "0--0--\n-0-0--\n000000\n--00--\n---00-\n---0-0",
};
const char* const kFamilyB[4] = {
    "0-0---\n-00---\n--0---\n000000\n--0-0-\n--0--0",
    "0-0---\n-00---\n--00--\n00-000\n--0-0-\n--0--0",
    "0-0---\n-00---\n--00--\n000000\n--0-0-\n--0--0",
    "0-0---\n-00---\n--0---\n00-000\n--0-0-\n--0--0",
};

const char* const kCirculant3 = "0-0\n00-\n-00";

const char* const kWnlFar[2] = {"0-0\n-0-\n-00", "00-\n-00\n--0"};

trop::NormalMatrix matrix(const char* text) { return trop::parse_matrix(text); }

trop::NormalMatrix outside_a(int n) {
  if (n < 3 || n > 6) throw trop::InvalidArgument("no fixture of that order");
  return matrix(kOutsideA[n - 3]);
}

trop::NormalMatrix outside_b(int n) {
  if (n < 3 || n > 6) throw trop::InvalidArgument("no fixture of that order");
  return matrix(kOutsideB[n - 3]);
}

}  // namespace fixtures
