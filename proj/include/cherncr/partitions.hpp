#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cherncr/rational.hpp"

namespace cherncr {

// A partition of n encoded by multiplicities: parts[k-1] is the number of
// parts equal to k, so sum k*parts[k-1] == n.
class Partition {
  public:
    Partition(std::vector<int> parts, int n) : parts_(std::move(parts)), n_(n) {
        if (n_ < 1) throw std::invalid_argument("partition weight must be positive");
        if (static_cast<int>(parts_.size()) != n_)
            throw std::invalid_argument("partition tuple must have length n");
        long w = 0;
        for (int k = 1; k <= n_; ++k) {
            if (parts_[k - 1] < 0) throw std::invalid_argument("negative partition entry");
            w += static_cast<long>(k) * parts_[k - 1];
        }
        if (w != n_) throw std::invalid_argument("partition entries do not sum to weight " +
                                                 std::to_string(n_));
    }

    int weight() const { return n_; }
    int operator[](int k) const { return parts_.at(k - 1); }  // multiplicity of part k
    const std::vector<int>& multiplicities() const { return parts_; }

    // Comma-separated tuple, e.g. "1,1,0".
    std::string str() const {
        std::string out;
        for (int k = 1; k <= n_; ++k) {
            if (k > 1) out += ",";
            out += std::to_string(parts_[k - 1]);
        }
        return out;
    }

    static Partition parse(std::string_view text) {
        std::vector<int> parts;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t next = text.find(',', pos);
            std::string_view field = text.substr(pos, next == std::string_view::npos ? next : next - pos);
            if (field.empty()) throw std::invalid_argument("malformed partition: '" + std::string(text) + "'");
            int value = 0;
            for (char ch : field) {
                if (ch < '0' || ch > '9')
                    throw std::invalid_argument("malformed partition: '" + std::string(text) + "'");
                value = value * 10 + (ch - '0');
            }
            parts.push_back(value);
            if (next == std::string_view::npos) break;
            pos = next + 1;
        }
        return Partition(std::move(parts), static_cast<int>(parts.size()));
    }

    friend bool operator==(const Partition&, const Partition&) = default;

    // Lexicographic on the multiplicity tuple; partitions(n) lists in
    // descending order of this.
    friend bool operator<(const Partition& a, const Partition& b) {
        return a.parts_ < b.parts_;
    }

  private:
    std::vector<int> parts_;
    int n_;
};

// All partitions of n, in descending lex order on the multiplicity tuple.
// For n = 2 this is [(2,0), (0,1)].
inline std::vector<Partition> partitions(int n) {
    if (n < 1) throw std::invalid_argument("partitions: n must be positive");
    std::vector<Partition> out;
    std::vector<int> current(n, 0);
    auto recurse = [&](auto&& self, int k, int remaining) -> void {
        if (k > n) {
            if (remaining == 0) out.emplace_back(current, n);
            return;
        }
        for (int mult = remaining / k; mult >= 0; --mult) {
            current[k - 1] = mult;
            self(self, k + 1, remaining - k * mult);
        }
        current[k - 1] = 0;
    };
    recurse(recurse, 1, n);
    return out;
}

}  // namespace cherncr
