#ifndef QS_VAR_CONTEXT_HPP
#define QS_VAR_CONTEXT_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace qs {

class VarContext;
using VarContextPtr = std::shared_ptr<const VarContext>;

// An ordered list of distinct variable names.  The declared order is the
// term-order priority: earlier variables weigh more in the lexicographic
// comparison of monomials.  Contexts are immutable and shared by pointer;
// two contexts are interchangeable exactly when their name lists match.
class VarContext {
 public:
  static VarContextPtr make(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t index) const;
  const std::vector<std::string>& names() const noexcept { return names_; }

  bool has(const std::string& name) const;
  // Index of `name`; throws UnknownVariable if absent.
  std::size_t index_of(const std::string& name) const;

  bool same_names(const VarContext& other) const { return names_ == other.names_; }

  // New context with `name` appended (must be fresh).
  VarContextPtr extended(const std::string& name) const;
  // New context containing only the names in `keep`, in their current order.
  VarContextPtr restricted(const std::vector<std::size_t>& keep) const;

  // A name not present in this context: `base`, then `base_1`, `base_2`, ...
  std::string fresh_name(const std::string& base) const;

 private:
  explicit VarContext(std::vector<std::string> names);
  std::vector<std::string> names_;
};

// Equality of contexts as name lists (pointer identity is irrelevant).
bool same_context(const VarContextPtr& a, const VarContextPtr& b);

// Throws ContextMismatch unless the two contexts agree.
void require_same_context(const VarContextPtr& a, const VarContextPtr& b,
                          const char* where);

}  // namespace qs

#endif  // QS_VAR_CONTEXT_HPP
