#include "apollo/inversive.hpp"

namespace apollo {

std::string to_pretty_string(const DiskSymbol<FieldElement>& d) {
  return "(" + to_pretty_string(d(kXr)) + ", " + to_pretty_string(d(kYr)) + ")/(" + to_pretty_string(d(kBeta)) +
         ", " + to_pretty_string(d(kGamma)) + ")";
}

std::string symbol_key(const DiskSymbol<FieldElement>& d) {
  std::string key;
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) {
      key += to_string(d(i).coeff(k));
      key += ',';
    }
    key += '|';
  }
  return key;
}

DiskSymbol<double> to_double(const DiskSymbol<FieldElement>& d) {
  return make_symbol(to_double(d(kXr)), to_double(d(kYr)), to_double(d(kBeta)), to_double(d(kGamma)));
}

}  // namespace apollo
