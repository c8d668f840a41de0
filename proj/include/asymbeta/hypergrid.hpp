#pragma once

#include <string>
#include <variant>
#include <vector>

#include "asymbeta/ffnn.hpp"
#include "asymbeta/learners.hpp"
#include "asymbeta/tree_models.hpp"

namespace asymbeta {

enum class Family { Pcr, Pls, ElasticNet, GBoost, RForest, Ffnn };
inline constexpr std::array<Family, 6> kAllFamilies = {
    Family::Pcr,    Family::Pls,     Family::ElasticNet,
    Family::GBoost, Family::RForest, Family::Ffnn};

const char* to_string(Family f);
Family family_from_string(std::string_view s);
bool is_linear_family(Family f);

struct PcrCand { int k; };
struct PlsCand { int k; };
struct EnetCand { double lambda; double alpha; };
struct GBoostCand { int max_trees; int depth; double learning_rate; };
struct ForestCand { int n_trees; int depth; };
struct FfnnCand {
  double learning_rate;
  double dropout;
  int depth;
  int max_epochs = 100;
  int seed_count = 10;
};

using HyperCandidate = std::variant<PcrCand, PlsCand, EnetCand, GBoostCand,
                                    ForestCand, FfnnCand>;

std::string candidate_to_string(const HyperCandidate& c);

// Tuning grid for one family; candidates are enumerated in a fixed order so
// validation ties resolve deterministically (first in enumeration wins).
struct HyperGrid {
  Family family;
  std::vector<HyperCandidate> candidates;
};

HyperGrid default_grid(Family f);

// Fits one candidate. The validation set feeds early stopping for boosting
// and the network; seed drives every random component.
ModelPtr fit_candidate(const HyperCandidate& cand, const TrainingSet& train,
                       const TrainingSet& validation, uint64_t seed);

}  // namespace asymbeta
