#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace genus2 {

inline constexpr std::size_t kMaxVars = 32;

// Ordered variable names with weights. Two tables are compatible when
// names and weights agree, so independently built tables interoperate.
class VarTable {
public:
    VarTable(std::vector<std::string> names, std::vector<int> weights = {});

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    int weight(std::size_t i) const { return weights_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<int>& weights() const { return weights_; }
    std::optional<std::size_t> index_of(const std::string& name) const;
    std::size_t require(const std::string& name) const;

    bool operator==(const VarTable& o) const { return names_ == o.names_ && weights_ == o.weights_; }

private:
    std::vector<std::string> names_;
    std::vector<int> weights_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

VarTablePtr make_table(std::vector<std::string> names, std::vector<int> weights = {});
bool same_table(const VarTablePtr& a, const VarTablePtr& b);

// Tables used throughout: parameters t2..t5 and the frame coordinates.
VarTablePtr t_table();
VarTablePtr frame_table();

}  // namespace genus2
