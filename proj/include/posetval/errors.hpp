#pragma once

#include <stdexcept>
#include <string>

namespace posetval {

// Base for all domain errors thrown by this library.
struct error : std::runtime_error {
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Cover relation input contains a directed cycle.
struct cycle_error : error {
  explicit cycle_error(const std::string& msg) : error(msg) {}
};

// Notch fields do not satisfy the notch condition.
struct notch_error : error {
  explicit notch_error(const std::string& msg) : error(msg) {}
};

// A substitution annihilated a denominator factor.
struct pole_error : error {
  explicit pole_error(const std::string& msg) : error(msg) {}
};

// Operand does not have the shape the operation requires.
struct shape_error : error {
  explicit shape_error(const std::string& msg) : error(msg) {}
};

// Input that must be connected is not.
struct disconnected_error : error {
  explicit disconnected_error(const std::string& msg) : error(msg) {}
};

// Supplied embedding does not witness strong planarity.
struct not_strongly_planar_error : error {
  explicit not_strongly_planar_error(const std::string& msg) : error(msg) {}
};

// Vectors expected to be linearly independent are not.
struct dependence_error : error {
  explicit dependence_error(const std::string& msg) : error(msg) {}
};

// Vector family fails the cyclicity precondition.
struct cyclicity_error : error {
  explicit cyclicity_error(const std::string& msg) : error(msg) {}
};

// Malformed user input (files, flags); carries a diagnostic.
struct input_error : error {
  explicit input_error(const std::string& msg) : error(msg) {}
};

}  // namespace posetval
