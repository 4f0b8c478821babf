#include "qeuler/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qeuler/errors.hpp"

namespace qeuler {

Partition Partition::make(std::vector<int> parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw ValidationError("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw ValidationError("partition parts must be weakly decreasing");
    }
    Partition p;
    p.parts_ = std::move(parts);
    return p;
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
    if (i < 1 || i > length()) return 0;
    return parts_[static_cast<std::size_t>(i - 1)];
}

bool Partition::fits_box(int rows, int cols) const {
    return length() <= rows && (parts_.empty() || parts_[0] <= cols);
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    if (parts_.empty()) return empty();
    conj.resize(static_cast<std::size_t>(parts_[0]));
    for (int col = 1; col <= parts_[0]; ++col) {
        int count = 0;
        for (int p : parts_)
            if (p >= col) ++count;
        conj[static_cast<std::size_t>(col - 1)] = count;
    }
    return make(std::move(conj));
}

Partition Partition::complement(int rows, int cols) const {
    if (!fits_box(rows, cols))
        throw ValidationError("partition does not fit the box");
    std::vector<int> comp;
    comp.reserve(static_cast<std::size_t>(rows));
    for (int i = 1; i <= rows; ++i) {
        int v = cols - part(rows + 1 - i);
        if (v > 0) comp.push_back(v);
    }
    return make(std::move(comp));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

bool Partition::operator<(const Partition& o) const {
    if (size() != o.size()) return size() < o.size();
    return std::lexicographical_compare(o.parts_.begin(), o.parts_.end(),
                                        parts_.begin(), parts_.end());
}

namespace {

void enumerate(int rows, int cols, int maxPart, std::vector<int>& cur,
               std::vector<Partition>& out) {
    out.push_back(cur.empty() ? Partition::empty() : Partition::make(cur));
    if (static_cast<int>(cur.size()) == rows) return;
    for (int p = std::min(maxPart, cols); p >= 1; --p) {
        cur.push_back(p);
        enumerate(rows, cols, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_in_box(int rows, int cols) {
    if (rows < 0 || cols < 0)
        throw ValidationError("box dimensions must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    enumerate(rows, cols, cols, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace qeuler
