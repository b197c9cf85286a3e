#ifndef CANAL_ERRORS_HPP
#define CANAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace canal {

// Base class for all kernel precondition / domain failures.  The CLI maps
// these to exit code 3; anything else (bad input syntax) maps to exit code 2.
struct KernelError : std::runtime_error {
    explicit KernelError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : KernelError {
    explicit DivisionByZero(const std::string& msg = "division by zero") : KernelError(msg) {}
};

struct DegenerateInput : KernelError {
    explicit DegenerateInput(const std::string& msg = "degenerate input") : KernelError(msg) {}
};

struct PoleAtInput : KernelError {
    explicit PoleAtInput(const std::string& msg = "evaluation at a pole") : KernelError(msg) {}
};

// Linear spine curves define surfaces of revolution, which are handled by
// dedicated methods for that class of surfaces, not by this kernel.
struct LinearSpine : KernelError {
    explicit LinearSpine(const std::string& msg =
        "linear spine: the surface is a surface of revolution; axis/directrix methods apply instead")
        : KernelError(msg) {}
};

struct ExactnessRequired : KernelError {
    explicit ExactnessRequired(const std::string& msg = "operation requires exact rational data")
        : KernelError(msg) {}
};

struct FrameDegenerate : KernelError {
    explicit FrameDegenerate(const std::string& msg = "Frenet frame degenerate at all attempted parameters")
        : KernelError(msg) {}
};

struct DegenerateEnvelope : KernelError {
    explicit DegenerateEnvelope(const std::string& msg = "envelope condition degenerates identically")
        : KernelError(msg) {}
};

struct DegenerateCircle : KernelError {
    explicit DegenerateCircle(const std::string& msg = "characteristic circle degenerate at this parameter")
        : KernelError(msg) {}
};

struct NotPlanar : KernelError {
    explicit NotPlanar(const std::string& msg = "curve is not planar") : KernelError(msg) {}
};

struct DegenerateConic : KernelError {
    explicit DegenerateConic(const std::string& msg = "conic is degenerate") : KernelError(msg) {}
};

struct NotADupinConfiguration : KernelError {
    explicit NotADupinConfiguration(const std::string& msg = "spine data is not a Dupin cyclide configuration")
        : KernelError(msg) {}
};

struct InvalidParams : KernelError {
    explicit InvalidParams(const std::string& msg = "parameters violate the canonical-form constraints")
        : KernelError(msg) {}
};

struct InconsistentConstraint : KernelError {
    explicit InconsistentConstraint(const std::string& msg = "constraint system is inconsistent")
        : KernelError(msg) {}
};

struct SymmetryIncompatible : KernelError {
    int failing_order = -1;
    explicit SymmetryIncompatible(const std::string& msg, int k = -1)
        : KernelError(msg), failing_order(k) {}
};

struct DegenerateBlend : KernelError {
    explicit DegenerateBlend(const std::string& msg = "blend request degenerates (coincident junction data)")
        : KernelError(msg) {}
};

struct PoleInWindow : KernelError {
    explicit PoleInWindow(const std::string& msg = "sampling window contains a pole or frame degeneracy")
        : KernelError(msg) {}
};

// Raised when a geometric quantity (unit vector, focal distance, ...) is not
// representable over the rationals, so no exact pose exists for the data.
struct NotRationallyRepresentable : KernelError {
    explicit NotRationallyRepresentable(const std::string& msg =
        "geometric quantity is irrational; exact frame recovery is not possible for this input")
        : KernelError(msg) {}
};

} // namespace canal

#endif
