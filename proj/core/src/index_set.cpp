#include "rpa/index_set.hpp"

#include "rpa/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace rpa {

IndexSet::IndexSet() : modulus_(1), mask_(1, false) {}

IndexSet::IndexSet(Natural modulus, const std::set<Natural> &residues,
                   const std::set<Natural> &added, const std::set<Natural> &removed) {
    if (modulus == 0) {
        throw Error(ErrorCode::InvalidArgument, "index set modulus must be positive");
    }
    modulus_ = modulus;
    mask_.assign(modulus, false);
    for (Natural r : residues) {
        mask_[r % modulus] = true;
    }
    minimize_period();
    std::set<Natural> candidates = added;
    candidates.insert(removed.begin(), removed.end());
    for (Natural x : candidates) {
        const bool member = !removed.contains(x) && (added.contains(x) || has_residue(x));
        if (member && !has_residue(x)) {
            added_.insert(x);
        } else if (!member && has_residue(x)) {
            removed_.insert(x);
        }
    }
}

void IndexSet::minimize_period() {
    for (Natural d = 1; d < modulus_; ++d) {
        if (modulus_ % d != 0) {
            continue;
        }
        bool periodic = true;
        for (Natural r = d; r < modulus_ && periodic; ++r) {
            periodic = mask_[r] == mask_[r % d];
        }
        if (periodic) {
            mask_.resize(d);
            modulus_ = d;
            return;
        }
    }
}

IndexSet IndexSet::all() { return IndexSet(1, {0}); }
IndexSet IndexSet::evens() { return IndexSet(2, {0}); }
IndexSet IndexSet::odds() { return IndexSet(2, {1}); }
IndexSet IndexSet::finite(const std::set<Natural> &elements) { return IndexSet(1, {}, elements); }
IndexSet IndexSet::residue_class(Natural modulus, Natural residue) {
    return IndexSet(modulus, {residue});
}

bool IndexSet::contains(Natural n) const {
    if (added_.contains(n)) {
        return true;
    }
    if (removed_.contains(n)) {
        return false;
    }
    return has_residue(n);
}

std::vector<Natural> IndexSet::residues() const {
    std::vector<Natural> out;
    for (Natural r = 0; r < modulus_; ++r) {
        if (mask_[r]) {
            out.push_back(r);
        }
    }
    return out;
}

bool IndexSet::is_finite() const {
    return std::none_of(mask_.begin(), mask_.end(), [](bool b) { return b; });
}

bool IndexSet::is_cofinite() const {
    return std::all_of(mask_.begin(), mask_.end(), [](bool b) { return b; });
}

IndexSet IndexSet::complement() const { return set_complement(*this); }

namespace {

void write_elements(std::ostringstream &out, const auto &elements) {
    out << '{';
    bool first = true;
    for (Natural x : elements) {
        if (!first) {
            out << ", ";
        }
        out << x;
        first = false;
    }
    out << '}';
}

class SetTextParser {
  public:
    explicit SetTextParser(std::string_view text) : text_(text) {}

    IndexSet parse() {
        expect_word("mod");
        const Natural modulus = number();
        const std::set<Natural> residues = element_list();
        std::set<Natural> added;
        std::set<Natural> removed;
        skip_space();
        while (pos_ < text_.size()) {
            const char sign = text_[pos_++];
            if (sign == '+') {
                const auto more = element_list();
                added.insert(more.begin(), more.end());
            } else if (sign == '-') {
                const auto more = element_list();
                removed.insert(more.begin(), more.end());
            } else {
                fail("expected '+' or '-'");
            }
            skip_space();
        }
        if (modulus == 0) {
            fail("modulus must be positive");
        }
        return IndexSet(modulus, residues, added, removed);
    }

  private:
    [[noreturn]] void fail(const std::string &what) const {
        throw Error(ErrorCode::InvalidArgument, "index set '" + std::string(text_) +
                                                    "': " + what + " at offset " +
                                                    std::to_string(pos_));
    }
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }
    void expect_word(std::string_view word) {
        skip_space();
        if (text_.substr(pos_, word.size()) != word) {
            fail("expected '" + std::string(word) + "'");
        }
        pos_ += word.size();
    }
    void expect_char(char c) {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }
    Natural number() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected a natural number");
        }
        return std::stoull(std::string(text_.substr(start, pos_ - start)));
    }
    std::set<Natural> element_list() {
        std::set<Natural> out;
        expect_char('{');
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '}') {
            ++pos_;
            return out;
        }
        for (;;) {
            out.insert(number());
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == ',') {
                ++pos_;
                continue;
            }
            expect_char('}');
            return out;
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

std::string IndexSet::to_string() const {
    std::ostringstream out;
    out << "mod " << modulus_ << ' ';
    write_elements(out, residues());
    if (!added_.empty()) {
        out << " + ";
        write_elements(out, added_);
    }
    if (!removed_.empty()) {
        out << " - ";
        write_elements(out, removed_);
    }
    return out.str();
}

IndexSet IndexSet::parse(std::string_view text) { return SetTextParser(text).parse(); }

IndexSet set_algebra(const IndexSet &lhs, const IndexSet &rhs, SetOp op) {
    const auto combine = [op](bool a, bool b) {
        switch (op) {
        case SetOp::Union: return a || b;
        case SetOp::Intersection: return a && b;
        case SetOp::Difference: return a && !b;
        }
        return false;
    };
    const Natural modulus = std::lcm(lhs.modulus(), rhs.modulus());
    std::vector<bool> mask(modulus);
    for (Natural r = 0; r < modulus; ++r) {
        mask[r] = combine(lhs.has_residue(r), rhs.has_residue(r));
    }
    std::set<Natural> candidates = lhs.added();
    candidates.insert(lhs.removed().begin(), lhs.removed().end());
    candidates.insert(rhs.added().begin(), rhs.added().end());
    candidates.insert(rhs.removed().begin(), rhs.removed().end());
    std::set<Natural> members;
    std::set<Natural> non_members;
    for (Natural x : candidates) {
        (combine(lhs.contains(x), rhs.contains(x)) ? members : non_members).insert(x);
    }
    std::set<Natural> residues;
    for (Natural r = 0; r < modulus; ++r) {
        if (mask[r]) {
            residues.insert(r);
        }
    }
    return IndexSet(modulus, residues, members, non_members);
}

IndexSet set_complement(const IndexSet &set) {
    std::set<Natural> residues;
    for (Natural r = 0; r < set.modulus(); ++r) {
        if (!set.has_residue(r)) {
            residues.insert(r);
        }
    }
    return IndexSet(set.modulus(), residues, set.removed(), set.added());
}

} // namespace rpa
