#pragma once

#include <stdexcept>
#include <string>

namespace asharp {

// Exit-code families for the CLI. Library code throws; main() maps code().
enum class errc : int {
  ok = 0,
  check_failed = 1,
  config = 2,
  phase_load = 3,
  domain = 4,
  numerical = 5,
  io = 6,
};

class Error : public std::runtime_error {
public:
  Error(errc c, const std::string& what) : std::runtime_error(what), code_(c) {}
  errc code() const { return code_; }

private:
  errc code_;
};

// Bad arguments: p outside [1,2], invalid orders, empty boxes, bad radii.
struct DomainError : Error {
  explicit DomainError(const std::string& w) : Error(errc::domain, w) {}
};

// Nondegeneracy assumption fails: |d2^2 phi(0,0)| below threshold.
struct DegeneracyError : Error {
  explicit DegeneracyError(const std::string& w) : Error(errc::domain, w) {}
};

// Witness profile invalid (radius out of range, empty support).
struct ProfileError : Error {
  explicit ProfileError(const std::string& w) : Error(errc::domain, w) {}
};

// Asked for something the oracle cannot deliver (derivative order > d_max).
struct CapabilityError : Error {
  explicit CapabilityError(const std::string& w) : Error(errc::domain, w) {}
};

// Newton trace of the critical curve failed to meet the residual target.
struct FoldTraceError : Error {
  explicit FoldTraceError(const std::string& w) : Error(errc::numerical, w) {}
};

// b*(x2-psi)^2 + b0 does not reproduce the phase within tolerance.
struct DecompositionError : Error {
  explicit DecompositionError(const std::string& w) : Error(errc::numerical, w) {}
};

// Sampled vanishing-order probes disagree; refuse to guess.
struct AmbiguityError : Error {
  explicit AmbiguityError(const std::string& w) : Error(errc::numerical, w) {}
};

// Oscillatory quadrature would exceed its node budget.
struct ResolutionError : Error {
  explicit ResolutionError(const std::string& w) : Error(errc::numerical, w) {}
};

// Too few samples to fit a decay rate.
struct InsufficientDataError : Error {
  explicit InsufficientDataError(const std::string& w) : Error(errc::numerical, w) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& w) : Error(errc::config, w) {}
};

struct PhaseLoadError : Error {
  explicit PhaseLoadError(const std::string& w) : Error(errc::phase_load, w) {}
};

struct DataError : Error {
  explicit DataError(const std::string& w) : Error(errc::io, w) {}
};

}  // namespace asharp
