#ifndef PARKMAT_JSON_IO_HPP
#define PARKMAT_JSON_IO_HPP

#include <json.hpp>

#include <string>

#include "parkmat/polymatroid.hpp"
#include "parkmat/representation.hpp"
#include "parkmat/set_system.hpp"
#include "parkmat/tutte.hpp"
#include "parkmat/verify.hpp"

namespace parkmat {

// All serializers emit canonically ordered JSON (object keys sorted, term
// lists sorted), so parse + re-dump is byte-identical.

nlohmann::json set_system_json(const SetSystem& sys);
nlohmann::json tutte_json(const TuttePoly& t);
nlohmann::json hvector_json(const HVector& h);
nlohmann::json polytope_json(const Polymatroid& p);
nlohmann::json mvpoly_json(const MVPoly& p);
nlohmann::json hyperplanes_json(const Representation& v, const std::vector<Hyperplane>& hs);
nlohmann::json verification_json(const VerificationReport& rep);

/// Human-readable facet inequalities in ascending block-bitmask order.
std::vector<std::string> facet_lines(const SubmodularTable& t);

/// "x_1 - 1/2 x_2" style rendering of a linear form.
std::string form_text(const std::vector<Rat>& form);

}  // namespace parkmat

#endif
