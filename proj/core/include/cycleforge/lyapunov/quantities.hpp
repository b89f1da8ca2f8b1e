#pragma once

#include "cycleforge/exactalg/matrix.hpp"
#include "cycleforge/lyapunov/normalize.hpp"

#include <map>
#include <string>
#include <vector>

namespace cycleforge {

// Coefficient of H_k set to zero at even degrees, where the solution has one free direction.
enum class Pinning { x_power, y_power };
const char* to_string(Pinning p);

struct LyapunovOptions {
    Pinning pinning = Pinning::x_power;
    // when nonempty, terms of total degree >= 2 in these symbols are dropped throughout
    std::vector<std::string> linear_in;
    bool verify_residual = true;
};

template <class K>
struct LyapunovReport {
    std::vector<Poly<K>> quantities;  // L_1 .. L_N
    std::string psi_choice = "x^{2k}";
    std::string kernel_pinning;
    std::map<int, Poly<K>> H;  // homogeneous parts H_2 .. H_{2N+2}
    std::vector<std::string> parameters;
    long radicand = 0;
    bool residual_verified = false;
    friend bool operator==(const LyapunovReport&, const LyapunovReport&) = default;
};

template <class K>
LyapunovReport<K> lyapunov_quantities(const NormalizedField<K>& nf, int N, const LyapunovOptions& opts = {});

// P H_x + Q H_y - sum L_k x^(2k+2) with the truncation of opts applied.
template <class K>
Poly<K> lyapunov_residual(const NormalizedField<K>& nf, const LyapunovReport<K>& report,
                          const LyapunovOptions& opts = {});

enum class FocusKind { center_candidate, stable_focus, unstable_focus };
const char* to_string(FocusKind k);

struct FocusStability {
    FocusKind kind = FocusKind::center_candidate;
    int k0 = 0;  // first index with L_k != 0, or 0
};

template <class K>
FocusStability focus_stability(const LyapunovReport<K>& report, const std::map<std::string, K>& binding);

// Row j: coefficients of the symbols in the degree-one part of L_{j+1}.
template <class K>
Matrix<Poly<K>> linear_parts_in(const LyapunovReport<K>& report, const std::vector<std::string>& symbols);

} // namespace cycleforge
