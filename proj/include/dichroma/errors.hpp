#ifndef DICHROMA_ERRORS_HPP
#define DICHROMA_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace dichroma {

using VertexId = int;

/// Base class of every exception thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// ---- digraph construction / queries ----

class LoopEdge : public Error {
 public:
  explicit LoopEdge(VertexId v)
      : Error("loop edge (" + std::to_string(v) + "," + std::to_string(v) + ") is not allowed"),
        vertex(v) {}
  VertexId vertex;
};

class DanglingEndpoint : public Error {
 public:
  DanglingEndpoint(VertexId u, VertexId v)
      : Error("edge (" + std::to_string(u) + "," + std::to_string(v) +
              ") has an endpoint outside the vertex set"),
        tail(u),
        head(v) {}
  VertexId tail;
  VertexId head;
};

class DuplicateVertex : public Error {
 public:
  explicit DuplicateVertex(VertexId v)
      : Error("vertex " + std::to_string(v) + " listed more than once"), vertex(v) {}
  VertexId vertex;
};

class VertexNotInGraph : public Error {
 public:
  explicit VertexNotInGraph(VertexId v)
      : Error("vertex " + std::to_string(v) + " is not in the digraph"), vertex(v) {}
  VertexId vertex;
};

class IncompleteColoring : public Error {
 public:
  explicit IncompleteColoring(VertexId v)
      : Error("vertex " + std::to_string(v) + " has no colour"), vertex(v) {}
  VertexId vertex;
};

// ---- growth functions and product construction ----

class EmptyInput : public Error {
 public:
  EmptyInput() : Error("input list must not be empty") {}
};

class SizeCapExceeded : public Error {
 public:
  SizeCapExceeded(long long size, long long cap)
      : Error("construction would have " + std::to_string(size) +
              " vertices, exceeding the cap of " + std::to_string(cap)),
        size(size),
        cap(cap) {}
  long long size;
  long long cap;
};

class DepthExceedsG : public Error {
 public:
  DepthExceedsG(int depth, int available)
      : Error("depth " + std::to_string(depth) + " exceeds the " + std::to_string(available) +
              " explicit growth-function values"),
        depth(depth),
        available(available) {}
  int depth;
  int available;
};

class InvalidPrefix : public Error {
 public:
  explicit InvalidPrefix(const std::string& why) : Error("invalid prefix: " + why) {}
};

class DepthTooSmall : public Error {
 public:
  DepthTooSmall(int wanted, int depth)
      : Error("colouring needs " + std::to_string(wanted) +
              " coordinates but the truncation has depth " + std::to_string(depth)),
        wanted(wanted),
        depth(depth) {}
  int wanted;
  int depth;
};

class LengthMismatch : public Error {
 public:
  LengthMismatch(int a, int b)
      : Error("sequences have different lengths " + std::to_string(a) + " and " +
              std::to_string(b)),
        left(a),
        right(b) {}
  int left;
  int right;
};

class EqualVertices : public Error {
 public:
  EqualVertices() : Error("the two product vertices are equal") {}
};

// ---- solver ----

class TooLarge : public Error {
 public:
  TooLarge(int size, int limit)
      : Error("digraph has " + std::to_string(size) + " vertices; the exhaustive oracle accepts " +
              std::to_string(limit) + " at most"),
        size(size),
        limit(limit) {}
  int size;
  int limit;
};

// ---- semihomomorphisms ----

class PartialMap : public Error {
 public:
  explicit PartialMap(VertexId v)
      : Error("vertex " + std::to_string(v) + " has no image under the map"), vertex(v) {}
  VertexId vertex;
};

class NotSemihom : public Error {
 public:
  NotSemihom() : Error("the map is not a semihomomorphism") {}
};

class NotAcyclicSemihom : public Error {
 public:
  NotAcyclicSemihom() : Error("the map is not an acyclic semihomomorphism") {}
};

class NotChromatic : public Error {
 public:
  NotChromatic() : Error("the colouring has a monochromatic directed cycle") {}
};

class FiberColoringNotChromatic : public Error {
 public:
  explicit FiberColoringNotChromatic(VertexId target)
      : Error("the colouring of the fiber over vertex " + std::to_string(target) +
              " is not chromatic"),
        target(target) {}
  VertexId target;
};

class ColourBudgetViolated : public Error {
 public:
  ColourBudgetViolated(int used, int budget)
      : Error("internal: composed colouring uses " + std::to_string(used) +
              " colours, over the budget of " + std::to_string(budget)),
        used(used),
        budget(budget) {}
  int used;
  int budget;
};

// ---- conditions ----

class FBoundViolated : public Error {
 public:
  explicit FBoundViolated(std::vector<VertexId> witness_set)
      : Error("the digraph has a subgraph smaller than the required bound (witness of size " +
              std::to_string(witness_set.size()) + ")"),
        witness(std::move(witness_set)) {}
  std::vector<VertexId> witness;
};

class BadDistinguished : public Error {
 public:
  explicit BadDistinguished(VertexId v)
      : Error("distinguished vertex " + std::to_string(v) + " is not in the digraph"), vertex(v) {}
  VertexId vertex;
};

class SizeMismatch : public Error {
 public:
  SizeMismatch(int a, int b)
      : Error("conditions have different sizes " + std::to_string(a) + " and " + std::to_string(b)),
        left(a),
        right(b) {}
  int left;
  int right;
};

class NotIsomorphic : public Error {
 public:
  NotIsomorphic() : Error("the conditions are not order-isomorphic over the root") {}
};

class NotPairwiseIsomorphic : public Error {
 public:
  NotPairwiseIsomorphic()
      : Error("the conditions are not pairwise order-isomorphic over the root") {}
};

class TooFewConditions : public Error {
 public:
  TooFewConditions(int required, int got)
      : Error("cycle threading needs " + std::to_string(required) + " conditions, got " +
              std::to_string(got)),
        required(required),
        got(got) {}
  int required;
  int got;
};

class DistinguishedInRoot : public Error {
 public:
  explicit DistinguishedInRoot(VertexId v)
      : Error("distinguished vertex " + std::to_string(v) + " lies in the root"), vertex(v) {}
  VertexId vertex;
};

}  // namespace dichroma

#endif
