#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "gspin/algebra.hpp"

namespace gspin {

enum class Mode { automatic, exhaustive, sampled };

std::string mode_name(Mode m);

struct VerifyOptions {
    Mode mode = Mode::automatic;
    std::uint64_t samples = 500;        // tuples drawn in sampled mode
    std::uint64_t seed = 1;
    std::uint64_t tuple_limit = 1'000'000; // automatic: exhaustive iff dim^3 fits
    std::size_t max_witnesses = 8;
    bool parallel = true;
};

/// Resolved checking mode for an algebra of the given basis size.
Mode resolve_mode(std::uint64_t dim, const VerifyOptions& opts);

struct Witness {
    std::vector<std::uint64_t> tuple;
    std::vector<std::string> labels;
    std::string detail;
};

struct LawResult {
    std::string law;
    std::string mode;        // "exhaustive" or "sampled"
    std::uint64_t checked = 0;
    std::uint64_t failed = 0;
    std::vector<Witness> witnesses;
    bool pass() const { return failed == 0; }
};

struct VerifyReport {
    std::string subject;
    std::vector<LawResult> laws;
    bool pass() const {
        for (const auto& l : laws)
            if (!l.pass()) return false;
        return true;
    }
    const LawResult* find(const std::string& law) const {
        for (const auto& l : laws)
            if (l.law == law) return &l;
        return nullptr;
    }
};

/// One law over a tuple space. check returns "" on success, otherwise a
/// short failure detail used in the witness. spaces (when given, one per
/// tuple slot) render witness labels.
struct LawSpec {
    std::string name;
    std::vector<std::uint64_t> dims;
    std::function<std::string(std::span<const std::uint64_t>)> check;
    std::vector<LabelSpaceRef> spaces;
};

/// Evaluate the law exhaustively or on seeded samples. The failing tuple set
/// is independent of thread count; witnesses are the first max_witnesses
/// failures in tuple order.
LawResult run_law(const LawSpec& spec, Mode resolved, const VerifyOptions& opts);

VerifyReport verify_star_algebra(const StructureAlgebra& A, const VerifyOptions& opts = {});
VerifyReport verify_hopf(const HopfStructure& H, const VerifyOptions& opts = {});
VerifyReport verify_module_algebra(const ModuleAction& action, const VerifyOptions& opts = {});

/// Fowler–Noll–Vo 64-bit hash; stable across platforms, used to derive
/// per-law sampling seeds.
std::uint64_t fnv1a(const std::string& s);

// Tensor-leg helpers shared by the Hopf and twisting verifiers. Elements live
// in the square space of H (or compatible pair spaces by name).
AlgebraElement comul_left_leg(const HopfStructure& H, const AlgebraElement& pair_elem);
AlgebraElement comul_right_leg(const HopfStructure& H, const AlgebraElement& pair_elem);
AlgebraElement counit_left_leg(const HopfStructure& H, const AlgebraElement& pair_elem);
AlgebraElement counit_right_leg(const HopfStructure& H, const AlgebraElement& pair_elem);
AlgebraElement mul_pair(const HopfStructure& H, const AlgebraElement& pair_elem,
                        bool antipode_left, bool antipode_right);

} // namespace gspin
