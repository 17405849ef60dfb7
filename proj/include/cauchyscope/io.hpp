#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "cauchyscope/boundary_spectrum.hpp"
#include "cauchyscope/certificates.hpp"
#include "cauchyscope/hankel_detector.hpp"
#include "cauchyscope/mero_extension.hpp"
#include "cauchyscope/rational_oracle.hpp"
#include "cauchyscope/winding.hpp"

namespace cauchyscope {

inline constexpr const char* kSchemaVersion = "cauchy-scope/1";

/// CSV sample format: header "j,re,im", rows j = 0..M-1 in order; the grid
/// point is implied as e^{2 pi i j / M}. Parse errors carry the line number.
BoundarySamples read_samples_csv(std::istream& in);
BoundarySamples read_samples_csv_file(const std::string& path);
void write_samples_csv(std::ostream& out, const BoundarySamples& samples);

/// JSON alternative: { "grid_size": M, "values": [[re, im], ...] }.
BoundarySamples samples_from_json(const nlohmann::json& j);
nlohmann::json samples_to_json(const BoundarySamples& samples);

/// Complex numbers serialize as [re, im] throughout.
nlohmann::json complex_to_json(Complex z);
Complex complex_from_json(const nlohmann::json& j);

nlohmann::json polynomial_to_json(const ComplexPolynomial& p);
ComplexPolynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const MeromorphicReport& report);
MeromorphicReport report_from_json(const nlohmann::json& j);

nlohmann::json winding_to_json(const WindingResult& w);
nlohmann::json certificate_to_json(const WindingCertificate& c);
WindingCertificate certificate_from_json(const nlohmann::json& j);

/// Rational test-case format:
/// { "zeros": [[re, im, mult], ...], "poles": [...], "scale": [re, im] }.
nlohmann::json rational_to_json(const RationalFunction& r);
RationalFunction rational_from_json(const nlohmann::json& j);

}  // namespace cauchyscope
