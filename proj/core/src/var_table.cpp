#include "genus2/var_table.hpp"

#include <stdexcept>

namespace genus2 {

VarTable::VarTable(std::vector<std::string> names, std::vector<int> weights)
    : names_(std::move(names)), weights_(std::move(weights)) {
    if (names_.size() > kMaxVars) throw std::invalid_argument("too many variables");
    if (weights_.empty()) weights_.assign(names_.size(), 1);
    if (weights_.size() != names_.size()) throw std::invalid_argument("weights and names differ in length");
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (names_[i] == names_[j]) throw std::invalid_argument("duplicate variable " + names_[i]);
}

std::optional<std::size_t> VarTable::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

std::size_t VarTable::require(const std::string& name) const {
    auto i = index_of(name);
    if (!i) throw std::invalid_argument("unknown variable " + name);
    return *i;
}

VarTablePtr make_table(std::vector<std::string> names, std::vector<int> weights) {
    return std::make_shared<const VarTable>(std::move(names), std::move(weights));
}

bool same_table(const VarTablePtr& a, const VarTablePtr& b) {
    return a == b || (a && b && *a == *b);
}

VarTablePtr t_table() {
    static const VarTablePtr t = make_table({"t2", "t3", "t4", "t5"}, {4, 6, 8, 10});
    return t;
}

VarTablePtr frame_table() {
    static const VarTablePtr t = make_table(
        {"t2", "t3", "t4", "t5", "s11", "s12", "s21", "s22", "s31", "s32", "s41", "s42"},
        {4, 6, 8, 10, 3, 1, 3, 1, 3, 1, 3, 1});
    return t;
}

}  // namespace genus2
