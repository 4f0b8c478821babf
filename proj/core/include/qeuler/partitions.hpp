#pragma once

#include <string>
#include <vector>

namespace qeuler {

// Integer partition: weakly decreasing positive parts.
class Partition {
public:
    static Partition make(std::vector<int> parts);
    static Partition empty() { return Partition{}; }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    int part(int i) const;  // 1-indexed; 0 beyond length

    bool fits_box(int rows, int cols) const;
    Partition conjugate() const;
    // Complement inside a rows x cols box: mu_i = cols - part(rows + 1 - i).
    Partition complement(int rows, int cols) const;

    std::string to_string() const;
    bool operator==(const Partition&) const = default;
    bool operator<(const Partition& o) const;  // by size, then lex descending parts

private:
    std::vector<int> parts_;
};

// All partitions fitting in a rows x cols box, sorted by (size, lex-descending
// parts); starts with the empty partition, ends with the full box.
std::vector<Partition> partitions_in_box(int rows, int cols);

}  // namespace qeuler
