#include "qs/var_context.hpp"

#include <algorithm>
#include <set>

#include "qs/error.hpp"

namespace qs {

VarContext::VarContext(std::vector<std::string> names) : names_(std::move(names)) {}

VarContextPtr VarContext::make(std::vector<std::string> names) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) fail(ErrorKind::InvalidInput, "empty variable name");
    if (!seen.insert(n).second)
      fail(ErrorKind::InvalidInput, "duplicate variable name '" + n + "'");
  }
  return VarContextPtr(new VarContext(std::move(names)));
}

const std::string& VarContext::name(std::size_t index) const {
  if (index >= names_.size()) fail(ErrorKind::Internal, "variable index out of range");
  return names_[index];
}

bool VarContext::has(const std::string& name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

std::size_t VarContext::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) fail(ErrorKind::UnknownVariable, "'" + name + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

VarContextPtr VarContext::extended(const std::string& name) const {
  if (has(name)) fail(ErrorKind::InvalidInput, "variable '" + name + "' already present");
  std::vector<std::string> names = names_;
  names.push_back(name);
  return make(std::move(names));
}

VarContextPtr VarContext::restricted(const std::vector<std::size_t>& keep) const {
  std::vector<std::string> names;
  names.reserve(keep.size());
  for (std::size_t idx : keep) names.push_back(name(idx));
  return make(std::move(names));
}

std::string VarContext::fresh_name(const std::string& base) const {
  if (!has(base)) return base;
  for (unsigned k = 1;; ++k) {
    std::string candidate = base + "_" + std::to_string(k);
    if (!has(candidate)) return candidate;
  }
}

bool same_context(const VarContextPtr& a, const VarContextPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_names(*b);
}

void require_same_context(const VarContextPtr& a, const VarContextPtr& b,
                          const char* where) {
  if (!same_context(a, b))
    fail(ErrorKind::ContextMismatch, std::string("in ") + where);
}

}  // namespace qs
