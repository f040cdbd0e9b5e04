#pragma once

#include "digifix/io.hpp"

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace digifix {

struct NamedImage {
    std::string name;
    DigitalImage image;
};

/// Small images used throughout the claim suite: singletons, intervals,
/// pictures, cycles, the wedge, the named fixtures and a disconnected pair.
std::vector<NamedImage> fixture_images();

enum class Verdict { Pass, Fail, Skipped };
std::string to_string(Verdict v);

struct ClaimRecord {
    std::string id;
    /// Statement being checked, in words.
    std::string locus;
    Verdict verdict = Verdict::Skipped;
    /// Evidence for a pass, counterexample or error for a failure.
    Json witness;
    double seconds = 0.0;
};

/// Hooks the suite calls instead of the library primitives, so tests can
/// swap in a broken implementation and watch the suite fail.
struct Primitives {
    std::function<bool(const DigitalMap&)> continuous;
    std::function<std::vector<Index>(const DigitalMap&)> fixed_points;

    static Primitives standard();
    /// "invert-continuity" or "no-fixed-points"; throws Error otherwise.
    static Primitives mutant(const std::string& name);
};

struct VerifyOptions {
    std::set<std::string> skip;
    std::uint64_t seed = 20190527;
    std::size_t budget = kDefaultNodeBudget;
    std::size_t jobs = 1;
    Primitives primitives = Primitives::standard();
};

struct ClaimOutcome {
    bool pass = false;
    Json witness;
};

struct Claim {
    std::string id;
    std::string locus;
    std::function<ClaimOutcome(const VerifyOptions&)> run;
};

/// All claims, sorted by id.
const std::vector<Claim>& claim_suite();

/// Runs every claim not in options.skip; records come back sorted by id.
/// Unknown ids in options.skip raise Error.
std::vector<ClaimRecord> run_claims(const VerifyOptions& options);

/// Byte-stable unless `timings` adds the wall times.
Json records_to_json(const std::vector<ClaimRecord>& records, bool timings);
std::string records_table(const std::vector<ClaimRecord>& records);
bool all_passed(const std::vector<ClaimRecord>& records);

} // namespace digifix
