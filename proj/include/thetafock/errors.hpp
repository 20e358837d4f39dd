#ifndef THETAFOCK_ERRORS_HPP
#define THETAFOCK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace thetafock {

/// Base class for all library errors; carries a short machine-readable name
/// that the CLI surfaces verbatim.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

struct DegenerateLattice : Error {
    explicit DegenerateLattice(const std::string& what)
        : Error("DegenerateLattice", what) {}
};

struct NonIntegralDimension : Error {
    explicit NonIntegralDimension(const std::string& what)
        : Error("NonIntegralDimension", what) {}
};

struct NomeOutOfRange : Error {
    explicit NomeOutOfRange(const std::string& what)
        : Error("NomeOutOfRange", what) {}
};

struct PoleAtLatticePoint : Error {
    explicit PoleAtLatticePoint(const std::string& what)
        : Error("PoleAtLatticePoint", what) {}
};

struct ZeroGamma : Error {
    explicit ZeroGamma(const std::string& what) : Error("ZeroGamma", what) {}
};

struct InconsistentMu : Error {
    explicit InconsistentMu(const std::string& what)
        : Error("InconsistentMu", what) {}
};

struct NoConvergence : Error {
    explicit NoConvergence(const std::string& what)
        : Error("NoConvergence", what) {}
};

struct Overflow : Error {
    explicit Overflow(const std::string& what) : Error("Overflow", what) {}
};

struct NotRealCharacter : Error {
    explicit NotRealCharacter(const std::string& what)
        : Error("NotRealCharacter", what) {}
};

struct NotOneDimensional : Error {
    explicit NotOneDimensional(const std::string& what)
        : Error("NotOneDimensional", what) {}
};

struct IdenticallyZero : Error {
    explicit IdenticallyZero(const std::string& what)
        : Error("IdenticallyZero", what) {}
};

struct PathUnstable : Error {
    explicit PathUnstable(const std::string& what)
        : Error("PathUnstable", what) {}
};

} // namespace thetafock

#endif
