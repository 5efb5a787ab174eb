#include "grass/code.hpp"

namespace grass {

void Cdc::insert(Subspace s) {
  if (s.n() != n_ || s.k() != k_)
    throw Error(Errc::AmbientMismatch, "member has n=" + std::to_string(s.n()) + " k=" +
                                           std::to_string(s.k()) + ", code has n=" + std::to_string(n_) +
                                           " k=" + std::to_string(k_));
  if (!keys_.insert(s.key()).second)
    throw Error(Errc::DuplicateCodeword, "subspace already present in " + provenance_);
  members_.push_back(std::move(s));
}

void Cdc::merge(const Cdc& other) {
  if (other.q_ != q_) throw Error(Errc::ParameterMismatch, "field order differs");
  members_.reserve(members_.size() + other.members_.size());
  for (const auto& s : other.members_) insert(s);
}

}  // namespace grass
