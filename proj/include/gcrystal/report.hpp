#ifndef GCRYSTAL_REPORT_HPP
#define GCRYSTAL_REPORT_HPP

// Per-run tallies of named checks, with replayable failure witnesses.

#include "gcrystal/serialize.hpp"
#include "gcrystal/lattice.hpp"

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>

namespace gcrystal {

/// Witnesses kept per check; counts are always complete.
inline constexpr std::size_t max_witnesses = 3;

struct CheckTally {
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    std::vector<Json> witnesses;
};

class RunReport {
public:
    RunReport(std::string suite, Shape shape, std::uint64_t seed, int trials)
        : suite_(std::move(suite)), shape_(shape), seed_(seed), trials_(trials)
    {
    }

    /// Records one check outcome; the witness callback runs only on failure.
    template <class WitnessFn>
    bool record(const std::string& check, bool ok, WitnessFn&& witness)
    {
        CheckTally& t = checks_[check];
        if (ok) {
            ++t.passed;
        } else {
            ++t.failed;
            if (t.witnesses.size() < max_witnesses) {
                t.witnesses.push_back(witness());
            }
        }
        return ok;
    }

    /// Non-gating outcome, logged verbatim.
    void observe(Json entry) { observations_.push_back(std::move(entry)); }

    void set_wall_time_ms(double ms) { wall_ms_ = ms; }
    void set_bound(std::int64_t bound) { bound_ = bound; }

    const std::string& suite() const noexcept { return suite_; }
    const Shape& shape() const noexcept { return shape_; }
    const std::map<std::string, CheckTally>& checks() const noexcept { return checks_; }
    const std::vector<Json>& observations() const noexcept { return observations_; }

    std::uint64_t total_failed() const
    {
        std::uint64_t acc = 0;
        for (const auto& [name, t] : checks_) {
            acc += t.failed;
        }
        return acc;
    }

    std::uint64_t total_passed() const
    {
        std::uint64_t acc = 0;
        for (const auto& [name, t] : checks_) {
            acc += t.passed;
        }
        return acc;
    }

    bool passed() const { return total_failed() == 0; }

    Json to_json(bool with_wall_time = true) const
    {
        Json checks = Json::object();
        for (const auto& [name, t] : checks_) {
            checks[name] = Json{{"passed", t.passed}, {"failed", t.failed}, {"witnesses", t.witnesses}};
        }
        Json out{{"suite", suite_},
                 {"n", shape_.n()},
                 {"k", shape_.k()},
                 {"seed", seed_},
                 {"prng", prng_id},
                 {"trials", trials_},
                 {"checks", checks},
                 {"passed", passed()}};
        if (bound_ > 0) {
            out["bound"] = bound_;
        }
        if (!observations_.empty()) {
            out["observations"] = observations_;
        }
        if (with_wall_time) {
            out["wall_time_ms"] = wall_ms_;
        }
        return out;
    }

    std::string summary() const
    {
        std::ostringstream os;
        os << suite_ << " n=" << shape_.n() << " k=" << shape_.k() << " seed=" << seed_ << " trials=" << trials_
           << (passed() ? " PASS" : " FAIL") << '\n';
        for (const auto& [name, t] : checks_) {
            os << "  " << name << ": " << t.passed << " passed, " << t.failed << " failed\n";
            for (const auto& w : t.witnesses) {
                os << "    witness " << w.dump() << '\n';
            }
        }
        return os.str();
    }

private:
    std::string suite_;
    Shape shape_;
    std::uint64_t seed_;
    int trials_;
    std::map<std::string, CheckTally> checks_;
    std::vector<Json> observations_;
    std::int64_t bound_ = 0;
    double wall_ms_ = 0;
};

} // namespace gcrystal

#endif
