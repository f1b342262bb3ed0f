// Rate systems x_{a,k}: one strictly positive exact rational per
// (letter, depth) pair, with JSON load/save.
#pragma once

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"
#include "word.hpp"

namespace debruijn {

class RateSystem {
public:
    RateSystem(int n, int L, std::vector<std::vector<Rational>> rates)
        : n_(n), L_(L), rates_(std::move(rates)) {
        if (n_ < 2) throw std::invalid_argument("alphabet size n must be >= 2");
        if (L_ < 1) throw std::invalid_argument("word length L must be >= 1");
        if (static_cast<int>(rates_.size()) != n_)
            throw std::invalid_argument("rate table must have n rows");
        for (int a = 1; a <= n_; ++a) {
            if (static_cast<int>(rates_[a - 1].size()) != L_)
                throw std::invalid_argument("rate table row must have L entries");
            for (int k = 1; k <= L_; ++k)
                if (rates_[a - 1][k - 1] <= 0)
                    throw std::invalid_argument("rate x_{" + std::to_string(a) + "," +
                                                std::to_string(k) + "} must be positive");
        }
    }

    int n() const { return n_; }
    int L() const { return L_; }

    const Rational& rate(int a, int k) const {
        check_index(a, k);
        return rates_[a - 1][k - 1];
    }

    // Depth capped at L; used where a formal depth L+1 appears.
    const Rational& rate_capped(int a, int k) const {
        return rate(a, std::min(k, L_));
    }

    // beta(w) = x_{a,k} for the final maximal block a^k of w.
    const Rational& beta(const Word& w) const {
        auto [a, k] = beta_index(w);
        return rate_capped(a, k);
    }

    // beta_{a,m} = x_{a,m} + sum_{b != a} x_{b,1}.
    Rational beta_sum(int a, int m) const {
        check_index(a, m);
        Rational s = rate(a, m);
        for (int b = 1; b <= n_; ++b)
            if (b != a) s += rate(b, 1);
        return s;
    }

    // Copies depth-L rates to depth L+1; states of length L+1 then see the
    // same capped rates as before.
    RateSystem extend_by_one() const {
        auto rates = rates_;
        for (int a = 1; a <= n_; ++a) rates[a - 1].push_back(rates_[a - 1][L_ - 1]);
        return RateSystem(n_, L_ + 1, std::move(rates));
    }

    static RateSystem from_json(const nlohmann::json& j) {
        if (!j.contains("n") || !j.contains("L") || !j.contains("rates"))
            throw std::invalid_argument("rate file needs fields n, L, rates");
        int n = j.at("n").get<int>();
        int L = j.at("L").get<int>();
        if (n < 2) throw std::invalid_argument("alphabet size n must be >= 2");
        if (L < 1) throw std::invalid_argument("word length L must be >= 1");
        std::vector<std::vector<Rational>> rates(n, std::vector<Rational>(L, Rational(0)));
        std::vector<std::vector<bool>> seen(n, std::vector<bool>(L, false));
        for (const auto& [key, value] : j.at("rates").items()) {
            auto comma = key.find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument("rate key '" + key + "' is not 'a,k'");
            int a = std::stoi(key.substr(0, comma));
            int k = std::stoi(key.substr(comma + 1));
            if (a < 1 || a > n || k < 1 || k > L)
                throw std::invalid_argument("rate key '" + key + "' out of range");
            Rational r = value.is_string() ? parse_rational(value.get<std::string>())
                                           : parse_rational(value.dump());
            rates[a - 1][k - 1] = r;
            seen[a - 1][k - 1] = true;
        }
        for (int a = 1; a <= n; ++a)
            for (int k = 1; k <= L; ++k)
                if (!seen[a - 1][k - 1])
                    throw std::invalid_argument("missing rate entry (" + std::to_string(a) +
                                                "," + std::to_string(k) + ")");
        return RateSystem(n, L, std::move(rates));
    }

    nlohmann::json to_json() const {
        nlohmann::json rates = nlohmann::json::object();
        for (int a = 1; a <= n_; ++a)
            for (int k = 1; k <= L_; ++k)
                rates[std::to_string(a) + "," + std::to_string(k)] =
                    format_rational(rate(a, k));
        return {{"n", n_}, {"L", L_}, {"rates", rates}};
    }

private:
    void check_index(int a, int k) const {
        if (a < 1 || a > n_) throw std::out_of_range("letter out of range 1..n");
        if (k < 1 || k > L_) throw std::out_of_range("depth out of range 1..L");
    }

    int n_;
    int L_;
    std::vector<std::vector<Rational>> rates_;
};

inline Rational beta_sum(int a, int m, const RateSystem& R) { return R.beta_sum(a, m); }

}  // namespace debruijn
