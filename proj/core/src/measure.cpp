#include "infoloss/measure.hpp"

#include <utility>

namespace infoloss {

FiniteMeasureSpace::FiniteMeasureSpace() : total_mass_(0) {}

FiniteMeasureSpace::FiniteMeasureSpace(std::vector<std::string> labels,
                                       std::vector<Weight> weights)
    : labels_(std::move(labels)), weights_(std::move(weights)), total_mass_(0) {
  if (labels_.size() != weights_.size()) {
    throw ValidationError(errc::length_mismatch,
                          std::to_string(labels_.size()) + " labels vs " +
                              std::to_string(weights_.size()) + " weights");
  }
  index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw ValidationError(errc::duplicate_label, "label \"" + labels_[i] + "\"");
    }
    if (weights_[i].is_negative()) {
      throw ValidationError(errc::negative_weight,
                            "label \"" + labels_[i] + "\" has weight " + weights_[i].str());
    }
    total_mass_ += weights_[i];
  }
}

std::optional<std::size_t> FiniteMeasureSpace::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

MeasurePreservingMap::MeasurePreservingMap(FiniteMeasureSpace domain,
                                           FiniteMeasureSpace codomain,
                                           std::vector<std::size_t> targets)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), targets_(std::move(targets)) {
  if (targets_.size() != domain_.size()) {
    throw ValidationError(errc::length_mismatch,
                          std::to_string(targets_.size()) + " targets for " +
                              std::to_string(domain_.size()) + " domain points");
  }
  for (std::size_t i = 0; i < targets_.size(); ++i) {
    if (targets_[i] >= codomain_.size()) {
      throw ValidationError(errc::target_not_in_codomain,
                            "domain label \"" + domain_.label(i) + "\" maps to index " +
                                std::to_string(targets_[i]) + " outside the codomain");
    }
  }
  validate_pushforward();
}

MeasurePreservingMap::MeasurePreservingMap(
    FiniteMeasureSpace domain, FiniteMeasureSpace codomain,
    const std::unordered_map<std::string, std::string>& assignment)
    : domain_(std::move(domain)), codomain_(std::move(codomain)) {
  targets_.reserve(domain_.size());
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    auto it = assignment.find(domain_.label(i));
    if (it == assignment.end()) {
      throw ValidationError(errc::unmapped_point,
                            "domain label \"" + domain_.label(i) + "\" has no assignment");
    }
    auto j = codomain_.index_of(it->second);
    if (!j) {
      throw ValidationError(errc::target_not_in_codomain,
                            "domain label \"" + domain_.label(i) + "\" maps to \"" + it->second +
                                "\" which is not a codomain label");
    }
    targets_.push_back(*j);
  }
  validate_pushforward();
}

void MeasurePreservingMap::validate_pushforward() const {
  std::vector<Weight> pushed(codomain_.size(), Weight(0));
  for (std::size_t i = 0; i < targets_.size(); ++i) {
    pushed[targets_[i]] += domain_.weight(i);
  }
  for (std::size_t j = 0; j < codomain_.size(); ++j) {
    if (pushed[j] != codomain_.weight(j)) {
      throw ValidationError(errc::pushforward_mismatch,
                            "codomain label \"" + codomain_.label(j) + "\" has stated mass " +
                                codomain_.weight(j).str() + " but pushforward mass " +
                                pushed[j].str());
    }
  }
}

FiniteMeasureSpace validate_space(std::vector<std::string> labels, std::vector<Weight> weights) {
  return FiniteMeasureSpace(std::move(labels), std::move(weights));
}

MeasurePreservingMap validate_map(FiniteMeasureSpace domain, FiniteMeasureSpace codomain,
                                  const std::unordered_map<std::string, std::string>& assignment) {
  return MeasurePreservingMap(std::move(domain), std::move(codomain), assignment);
}

Weight total_mass(const FiniteMeasureSpace& space) { return space.total_mass(); }

NormalizedSpace normalize(const FiniteMeasureSpace& space) {
  const Weight& mass = space.total_mass();
  if (mass.is_zero()) {
    throw ValidationError(errc::zero_total_mass, "cannot normalize a space of total mass 0");
  }
  std::vector<Weight> scaled;
  scaled.reserve(space.size());
  for (const Weight& w : space.weights()) scaled.push_back(w / mass);
  return NormalizedSpace{mass, FiniteMeasureSpace(space.labels(), std::move(scaled))};
}

MeasurePreservingMap terminal_map(const FiniteMeasureSpace& space) {
  FiniteMeasureSpace point({"*"}, {space.total_mass()});
  return MeasurePreservingMap(space, std::move(point),
                              std::vector<std::size_t>(space.size(), 0));
}

MeasurePreservingMap identity_map(const FiniteMeasureSpace& space) {
  std::vector<std::size_t> targets(space.size());
  for (std::size_t i = 0; i < targets.size(); ++i) targets[i] = i;
  return MeasurePreservingMap(space, space, std::move(targets));
}

bool is_bijective(const MeasurePreservingMap& map) {
  if (map.domain().size() != map.codomain().size()) return false;
  std::vector<bool> hit(map.codomain().size(), false);
  for (std::size_t t : map.targets()) {
    if (hit[t]) return false;
    hit[t] = true;
  }
  return true;
}

}  // namespace infoloss
