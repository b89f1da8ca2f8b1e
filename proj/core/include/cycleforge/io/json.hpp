#pragma once

#include "cycleforge/bifurcation/ggt.hpp"
#include "cycleforge/centers/certify.hpp"
#include "cycleforge/dynamics/game.hpp"
#include "cycleforge/dynamics/numeric.hpp"
#include "cycleforge/dynamics/singularities.hpp"
#include "cycleforge/lyapunov/quantities.hpp"
#include "cycleforge/resultants/cascade.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace cycleforge::io {

// Reports are emitted as JSON with sorted keys and 2-space indentation; polynomials, rationals and
// interval endpoints are exact strings.
std::string to_json(const LyapunovReport<Rational>& r);
std::string to_json(const LyapunovReport<QuadExt>& r);
std::string to_json(const CascadeResult& r);
std::string to_json(const CenterCertificate& c);
std::string to_json(const SingularityReport& r);
std::string to_json(const BerlinskiiResult& r);
std::string to_json(const std::vector<ContactPoint>& r);
std::string to_json(const GGTReport& r);
std::string to_json(const HopfReport& r);
std::string to_json(const Trajectory& t);
std::string to_json(const ReturnMapTable& t);
std::string to_json(const VectorField& f);

template <class K>
LyapunovReport<K> lyapunov_from_json(const std::string& text);
CascadeResult cascade_from_json(const std::string& text);
CenterCertificate certificate_from_json(const std::string& text);
SingularityReport singularities_from_json(const std::string& text);
BerlinskiiResult berlinskii_from_json(const std::string& text);
std::vector<ContactPoint> contacts_from_json(const std::string& text);
GGTReport ggt_from_json(const std::string& text);
HopfReport hopf_from_json(const std::string& text);
Trajectory trajectory_from_json(const std::string& text);
ReturnMapTable return_map_from_json(const std::string& text);

// {"f": .., "g": ..} or {"P": .., "Q": ..}
VectorField field_from_json(const std::string& text);
// {"A": [[..,..],[..,..]], "B": [[..,..],[..,..]], "d": optional}; entries are numbers or polynomial strings
GameModel game_from_json(const std::string& text);
// {"family": label | "f"/"g" | "P"/"Q", "terms": [{"target": "P", "term": "..", "inner": true}], "alpha": "alpha",
//  "point": [x, y], "frame": [a, b], "N": n, "fixed": {name: value}, "label": ..}
PerturbationSetup setup_from_json(const std::string& text);

std::string trajectory_csv(const Trajectory& t);
std::string return_map_csv(const ReturnMapTable& t);

// Writes to a temporary file in the same directory and renames it over the target.
void write_atomic(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

} // namespace cycleforge::io
