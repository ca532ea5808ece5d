#include "schlafli/errors.hpp"

namespace schlafli {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidTriangle:
      return "InvalidTriangle";
    case ErrorKind::NearDegenerate:
      return "NearDegenerate";
    case ErrorKind::InvalidLink:
      return "InvalidLink";
    case ErrorKind::InvalidTetrahedron:
      return "InvalidTetrahedron";
    case ErrorKind::WrongGeometry:
      return "WrongGeometry";
    case ErrorKind::SingularJacobian:
      return "SingularJacobian";
  }
  return "Unknown";
}

}  // namespace schlafli
