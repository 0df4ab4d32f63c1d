#pragma once

#include <stdexcept>
#include <string>

namespace gauge5 {

/// Raised when a statement is applied outside its hypotheses. The message
/// names the failed condition, e.g. "hypothesis 6∤c fails".
class HypothesisError : public std::domain_error {
public:
    explicit HypothesisError(const std::string& condition, const std::string& detail = {})
        : std::domain_error("hypothesis " + condition + " fails" + (detail.empty() ? "" : ": " + detail)),
          condition_(condition) {}

    const std::string& condition() const noexcept { return condition_; }

private:
    std::string condition_;
};

/// Raised when a catalog lookup has no row for the requested (group, prime).
class CatalogGap : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

}  // namespace gauge5
