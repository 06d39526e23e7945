#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "dsu/jl.hpp"
#include "dsu/verify.hpp"
#include "dsu/wavefunctions.hpp"

namespace dsu {

inline constexpr const char* kSchema = "dirac-su11/1";

// Physical members with N ≤ N_max, ordered by (N, j, eps).
std::vector<SpectralPoint> spectrum_table(const PhysicalParams& params, int N_max, Precision precision);

nlohmann::json to_json(const SpectralPoint& p);
nlohmann::json spectrum_json(const PhysicalParams& params, int N_max, Precision precision);
std::string spectrum_csv(const PhysicalParams& params, int N_max, Precision precision);

nlohmann::json to_json(const LaguerreReport& r, Precision precision);
nlohmann::json state_json(const RadialPair& normalized, const LaguerreReport& report, int nodes);

nlohmann::json to_json(const VerificationReport& rep);

nlohmann::json to_json(const std::vector<DiagonalityRecord>& rows, const PhysicalParams& params, Precision precision);
std::string diagonality_csv(const std::vector<DiagonalityRecord>& rows, Precision precision);

nlohmann::json to_json(const LimitTable& t, Precision precision);
std::string limit_csv(const LimitTable& t, Precision precision);

}  // namespace dsu
