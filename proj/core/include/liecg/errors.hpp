#pragma once

#include <stdexcept>
#include <string>

namespace liecg {

enum class ErrorKind {
  NotCommensurable,
  UnlabeledDiagram,
  UnknownIrrep,
  IncompleteDecomposition,
  PhaseObstruction,
  ZeroAnchor,
  InconsistentXi,
  ZetaDependence,
  IndexMismatch,
  UnknownMultiplet,
  Usage,
  Internal,
};

const char* error_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace liecg
