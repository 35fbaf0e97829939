#pragma once

#include <stdexcept>
#include <string>

namespace zdg {

// Z_n has no zero divisors (n prime or n < 4), so the graph is empty.
class empty_graph_error : public std::invalid_argument {
 public:
  explicit empty_graph_error(const std::string& what) : std::invalid_argument(what) {}
};

// The explicit-graph oracle refuses to build graphs above its vertex cap.
class oracle_cap_error : public std::runtime_error {
 public:
  oracle_cap_error(std::size_t vertices, std::size_t cap)
      : std::runtime_error("oracle cap exceeded: " + std::to_string(vertices) +
                           " vertices > cap " + std::to_string(cap)),
        vertices_(vertices),
        cap_(cap) {}

  std::size_t vertices() const noexcept { return vertices_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t vertices_;
  std::size_t cap_;
};

// An exact computation produced a result that contradicts its preconditions.
class invariant_violation : public std::logic_error {
 public:
  explicit invariant_violation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace zdg
