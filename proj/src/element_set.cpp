#include "nestobetti/element_set.hpp"

#include <algorithm>

#include "nestobetti/error.hpp"

namespace nestobetti {

namespace {

std::uint64_t label_bit(int label) {
  if (label < 1 || label > ElementSet::kMaxLabel) {
    throw Error(ErrorCode::LabelOutOfRange,
                "label " + std::to_string(label) + " outside [1, 64]");
  }
  return std::uint64_t{1} << (label - 1);
}

}  // namespace

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MissingSingleton: return "MissingSingleton";
    case ErrorCode::UnionAxiomViolated: return "UnionAxiomViolated";
    case ErrorCode::EmptyMember: return "EmptyMember";
    case ErrorCode::MemberOutsideGround: return "MemberOutsideGround";
    case ErrorCode::LabelOutOfRange: return "LabelOutOfRange";
    case ErrorCode::LabelOutsideGround: return "LabelOutsideGround";
    case ErrorCode::VertexNotInBuildingSet: return "VertexNotInBuildingSet";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotChordal: return "NotChordal";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::EmptyInterval: return "EmptyInterval";
    case ErrorCode::NotAlternatingBPermutation: return "NotAlternatingBPermutation";
    case ErrorCode::ChainHasDecreasingPosition: return "ChainHasDecreasingPosition";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::GroundTooLarge: return "GroundTooLarge";
  }
  return "Unknown";
}

int exit_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotChordal:
    case ErrorCode::NotConnected:
    case ErrorCode::Unbounded:
    case ErrorCode::EmptyInterval:
    case ErrorCode::NotAlternatingBPermutation:
    case ErrorCode::ChainHasDecreasingPosition:
      return 3;
    case ErrorCode::TooLarge:
    case ErrorCode::GroundTooLarge:
      return 4;
    default:
      return 2;
  }
}

ElementSet::ElementSet(std::initializer_list<int> labels) {
  for (int label : labels) bits_ |= label_bit(label);
}

ElementSet::ElementSet(const std::vector<int>& labels) {
  for (int label : labels) bits_ |= label_bit(label);
}

ElementSet ElementSet::interval(int lo, int hi) {
  ElementSet s;
  for (int i = lo; i <= hi; ++i) s.bits_ |= label_bit(i);
  return s;
}

ElementSet ElementSet::singleton(int label) { return from_bits(label_bit(label)); }

bool ElementSet::contains(int label) const {
  if (label < 1 || label > kMaxLabel) return false;
  return (bits_ >> (label - 1)) & 1U;
}

ElementSet ElementSet::with(int label) const { return from_bits(bits_ | label_bit(label)); }

ElementSet ElementSet::without(int label) const { return from_bits(bits_ & ~label_bit(label)); }

std::vector<int> ElementSet::labels() const { return {begin(), end()}; }

std::string ElementSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int label : *this) {
    if (!first) out += ',';
    out += std::to_string(label);
    first = false;
  }
  out += '}';
  return out;
}

bool canonical_less(ElementSet a, ElementSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  // Lexicographic on ascending label lists: the first differing label decides,
  // i.e. the smallest label in the symmetric difference belongs to the smaller set.
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  return (a.bits() & (diff & -diff)) != 0;
}

}  // namespace nestobetti
