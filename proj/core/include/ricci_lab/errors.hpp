#pragma once

#include <stdexcept>
#include <string>

namespace ricci_lab {

struct PointOutsideChart : std::runtime_error {
  explicit PointOutsideChart(const std::string& m) : std::runtime_error(m) {}
};
struct OutsideInjectivityRadius : std::runtime_error {
  explicit OutsideInjectivityRadius(const std::string& m) : std::runtime_error(m) {}
};
struct NotABoundaryPoint : std::runtime_error {
  explicit NotABoundaryPoint(const std::string& m) : std::runtime_error(m) {}
};
struct CutoffTooLarge : std::runtime_error {
  explicit CutoffTooLarge(const std::string& m) : std::runtime_error(m) {}
};
struct StepTooLarge : std::runtime_error {
  explicit StepTooLarge(const std::string& m) : std::runtime_error(m) {}
};
struct DivergedPath : std::runtime_error {
  explicit DivergedPath(const std::string& m) : std::runtime_error(m) {}
};
struct IntervalOutsideGrid : std::runtime_error {
  explicit IntervalOutsideGrid(const std::string& m) : std::runtime_error(m) {}
};
struct TooFewPaths : std::runtime_error {
  explicit TooFewPaths(const std::string& m) : std::runtime_error(m) {}
};
struct NestedDepthExceeded : std::runtime_error {
  explicit NestedDepthExceeded(const std::string& m) : std::runtime_error(m) {}
};
struct MomentCheckFailed : std::runtime_error {
  explicit MomentCheckFailed(const std::string& m) : std::runtime_error(m) {}
};
struct NonPositiveF : std::runtime_error {
  explicit NonPositiveF(const std::string& m) : std::runtime_error(m) {}
};
struct GridTooCoarse : std::runtime_error {
  explicit GridTooCoarse(const std::string& m) : std::runtime_error(m) {}
};
struct ConfigInvalid : std::runtime_error {
  explicit ConfigInvalid(const std::string& m) : std::runtime_error(m) {}
};
struct IoError : std::runtime_error {
  explicit IoError(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace ricci_lab
