#include "loopsym/partition.hpp"

#include <numeric>
#include <sstream>

namespace loopsym {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw domain_error("partition parts must be nonnegative");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw domain_error("partition parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
}

Partition Partition::parse(const std::string& text) {
    if (text.empty() || text == "0")
        return Partition();
    std::vector<int> parts;
    std::istringstream in(text);
    std::string piece;
    while (std::getline(in, piece, ',')) {
        std::size_t used = 0;
        int v;
        try {
            v = std::stoi(piece, &used);
        } catch (const std::exception&) {
            throw domain_error("cannot parse partition part '" + piece + "'");
        }
        if (used != piece.size())
            throw domain_error("cannot parse partition part '" + piece + "'");
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
    if (i < 1)
        throw domain_error("partition parts are indexed from 1");
    return i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

bool Partition::contains(const Partition& inner) const {
    for (int i = 1; i <= inner.length(); ++i)
        if (part(i) < inner.part(i))
            return false;
    return true;
}

std::string Partition::to_string() const {
    if (parts_.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition staircase(int m) {
    std::vector<int> parts;
    for (int i = m - 1; i >= 1; --i)
        parts.push_back(i);
    return Partition(std::move(parts));
}

std::vector<int> shifted_parts(const Partition& lambda, int m) {
    if (lambda.length() > m)
        throw domain_error("shifted_parts needs l(lambda) <= m");
    std::vector<int> alpha(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i)
        alpha[static_cast<std::size_t>(i - 1)] = lambda.part(i) + m - i;
    return alpha;
}

namespace {

void emit_partitions(int remaining, int cap, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(prefix));
        return;
    }
    for (int next = std::min(cap, remaining); next >= 1; --next) {
        prefix.push_back(next);
        emit_partitions(remaining - next, next, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int size) {
    if (size < 0)
        throw domain_error("partitions_of needs size >= 0");
    std::vector<Partition> out;
    std::vector<int> prefix;
    emit_partitions(size, size, prefix, out);
    return out;
}

std::vector<Partition> partitions_up_to(int max_size) {
    std::vector<Partition> out;
    for (int s = 0; s <= max_size; ++s)
        for (auto& p : partitions_of(s))
            out.push_back(std::move(p));
    return out;
}

} // namespace loopsym
