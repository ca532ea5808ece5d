#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace schlafli {

enum class ErrorKind {
  InvalidTriangle,
  NearDegenerate,
  InvalidLink,
  InvalidTetrahedron,
  WrongGeometry,
  SingularJacobian,
};

std::string_view to_string(ErrorKind kind);

/// Domain failure raised by the geometric kernels. The message names the
/// offending face, link or values.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace schlafli
