#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <maxlot/errors.hpp>
#include <maxlot/rational.hpp>

namespace maxlot {

/// An exact probability vector over the alternative set: entries >= 0 and
/// summing to exactly 1.
class Lottery {
  public:
    explicit Lottery(std::vector<Rational> probs) : probs_(std::move(probs)) {
        if (probs_.empty()) throw Error("lottery over empty alternative set");
        Rational sum{0};
        for (const Rational& p : probs_) {
            if (p < 0) throw Error("negative lottery probability " + to_string(p));
            sum += p;
        }
        if (sum != 1) throw Error("lottery probabilities sum to " + to_string(sum) + ", not 1");
    }

    static Lottery degenerate_at(int size, int alternative) {
        std::vector<Rational> p(static_cast<std::size_t>(size), Rational(0));
        p.at(static_cast<std::size_t>(alternative)) = 1;
        return Lottery(std::move(p));
    }

    static Lottery uniform(int size) {
        std::vector<Rational> p(static_cast<std::size_t>(size), Rational(1, size));
        return Lottery(std::move(p));
    }

    int size() const { return static_cast<int>(probs_.size()); }
    const Rational& operator[](int i) const { return probs_[static_cast<std::size_t>(i)]; }
    const std::vector<Rational>& probs() const { return probs_; }

    /// The supported alternative when exactly one entry equals 1.
    std::optional<int> degenerate() const {
        for (int i = 0; i < size(); ++i)
            if ((*this)[i] == 1) return i;
        return std::nullopt;
    }

    friend bool operator==(const Lottery& a, const Lottery& b) { return a.probs_ == b.probs_; }
    friend bool operator!=(const Lottery& a, const Lottery& b) { return !(a == b); }

  private:
    std::vector<Rational> probs_;
};

}  // namespace maxlot
