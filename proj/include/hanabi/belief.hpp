#pragma once

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "hanabi/blueprint.hpp"
#include "hanabi/game.hpp"
#include "hanabi/rng.hpp"

namespace hanabi {

// Remaining multiplicity per card type from the belief's perspective
// (public: deck + all hands; private: deck + the owner's own hand).
struct CardCounts {
  std::array<int16_t, kMaxTypes> n{};
  int total = 0;

  static CardCounts full(const GameConfig& cfg) {
    CardCounts c;
    for (int t = 0; t < cfg.numTypes(); ++t) {
      c.n[t] = cfg.rankMultiplicity[cfg.cardFromType(t).rank - 1];
      c.total += c.n[t];
    }
    return c;
  }
};

enum class Perspective : uint8_t { PublicView, PrivateView };

// Where a hand slot from some earlier timestep lives now: still in hand at
// `slot`, or departed with a publicly revealed identity.
struct SlotSource {
  int8_t slot = -1;  // >= 0: current slot index; < 0: use `fixed`
  Card fixed;
};
using SlotMap = std::vector<SlotSource>;

// Everything needed to re-ask "what move would `actor` have made at that
// turn if the belief owner had held hand h". Immutable once built.
struct ConstraintContext {
  Observation actorObs;  // actor's view at decision time
  int ownerPlayer = 0;
  std::shared_ptr<const BlueprintPolicy> policy;
  double uncertainty = 0.0;  // u > 0: soft filter (1-u)[match] + u/|legal|
  // AOH key template for history-dependent policies: literals interleaved
  // with holes that take the owner's decision-time cards.
  bool hasKeyTemplate = false;
  std::vector<std::string> keyLiterals;  // holes + 1 entries
  std::vector<int> keyHoleSlots;         // decision-time slot per hole
};

inline uint64_t packHand(std::span<const Card> cards, const GameConfig& cfg) {
  uint64_t k = 0;
  for (size_t i = 0; i < cards.size(); ++i)
    k |= static_cast<uint64_t>(cfg.typeIndex(cards[i]) + 1) << (6 * i);
  return k;
}

// One recorded policy filter (Eq. 6's policy factor). Evaluated lazily on
// hands of the owner's *current* hand; `sources` rebinds to the hand as it
// was when the action was observed.
struct PolicyConstraint {
  SlotMap sources;
  Move observed;
  std::shared_ptr<const ConstraintContext> ctx;
  // Range-search result table (packed past hand -> searched move); replaces
  // ctx-based evaluation when set. Hands absent from the table carry weight
  // zero (they were eliminated before the search executed).
  std::shared_ptr<const std::unordered_map<uint64_t, Move>> searchTable;
  GameConfig cfgForPack;

  double weight(std::span<const Card> currentHand) const;
};

struct StoredHand {
  std::array<Card, kMaxHand> cards;
  double cweight = 1.0;  // product of constraint weights; hypergeometric
                         // part is recomputed from live counts
};

struct RangeEntry {
  std::array<Card, kMaxHand> cards;
  double prob = 0.0;
};

struct BeliefRange {
  int handSize = 0;
  std::vector<RangeEntry> entries;
};

struct RangeOverflow {
  long long atLeast = 0;
};

using RangeResult = std::variant<BeliefRange, RangeOverflow>;

// Exact belief over one player's hand: per-slot candidate masks and card
// counts define a product prior (weights = falling-count products); policy
// constraints filter it. The support is materialized once the mask/count
// product drops below a threshold and maintained incrementally afterwards,
// so the worst-case ~10^7 opening support is never resident.
class HandBelief {
 public:
  HandBelief() = default;
  static HandBelief initial(const GameConfig& cfg, int owner);

  const GameConfig& config() const { return cfg_; }
  int owner() const { return owner_; }
  int handSize() const { return numSlots_; }
  Perspective perspective() const { return perspective_; }
  void setPerspective(Perspective p) { perspective_ = p; }
  uint32_t mask(int slot) const { return masks_[slot]; }
  const CardCounts& counts() const { return counts_; }
  bool materialized() const { return materialized_; }
  const std::vector<StoredHand>& support() const { return support_; }
  int numConstraints() const { return static_cast<int>(constraints_.size()); }

  void setMaterializeThreshold(long long t) { materializeThreshold_ = t; }

  // --- observation sub-updates ---------------------------------------
  void applyHintToOwner(Move hint, uint8_t touchedMask);
  void applyOwnerReveal(int slot, Card c, bool drew, bool handShrank);
  void applyExternalReveal(Card c);  // public perspective only
  void applyExternalDraw(Card c);    // private perspective only
  void conditionOnSeenCard(Card c);

  // --- policy update --------------------------------------------------
  void addConstraint(PolicyConstraint pc);

  // Identity slot map registered now and kept in sync with later slot
  // shifts; used by deferred range-search entries.
  int trackLineage();
  const SlotMap& lineage(int id) const { return trackedMaps_[id]; }
  void releaseLineage(int id);

  // --- queries ---------------------------------------------------------
  // Upper bound on the mask/count product support (ignores constraints).
  long long productBound() const;
  // Exact mask/count-feasible hand count if <= limit.
  std::optional<long long> productCountAtMost(long long limit) const;
  RangeResult enumerateRange(long long limit) const;
  double hyperWeight(std::span<const Card> cards) const;
  // Probability of one hand under the normalized belief (enumerates).
  double probabilityOf(std::span<const Card> cards) const;

  std::string snapshotJson(bool includeSupport) const;

  friend class HandSampler;

 private:
  void maybeMaterialize();
  void materialize(long long exactCount);
  void sortSupportCanonical();
  void filterSupportByMasks();
  void pruneZeroHyper();
  void remapSources(int departedSlot, Card fixed, bool shrank);

  GameConfig cfg_;
  int owner_ = 0;
  int numSlots_ = 0;
  Perspective perspective_ = Perspective::PublicView;
  std::array<uint32_t, kMaxHand> masks_{};
  CardCounts counts_;
  std::vector<PolicyConstraint> constraints_;
  std::vector<SlotMap> trackedMaps_;
  bool materialized_ = false;
  std::vector<StoredHand> support_;
  long long materializeThreshold_ = 250'000;
};

// Prepared sampler for repeated draws from one belief state. Materialized
// beliefs sample by inverse CDF; otherwise rejection from the count-product
// proposal with constraint acceptance.
class HandSampler {
 public:
  explicit HandSampler(const HandBelief& b, long long maxTrials = 200'000);
  std::span<const Card> sample(Rng& rng, std::array<Card, kMaxHand>& buf) const;

 private:
  const HandBelief& b_;
  long long maxTrials_;
  std::vector<double> cumulative_;  // materialized path
  double totalWeight_ = 0.0;
};

// Common-knowledge belief: one per-player hand factor over shared public
// count bookkeeping, plus a running hash of the public log.
class PublicBelief {
 public:
  PublicBelief() = default;
  static PublicBelief initial(const GameConfig& cfg);

  const GameConfig& config() const { return cfg_; }
  HandBelief& factor(int player) { return factors_[player]; }
  const HandBelief& factor(int player) const { return factors_[player]; }
  uint64_t logHash() const { return logHash_; }
  int turn() const { return turn_; }

  // Observation part of the belief update (Eq. 6, environment factor),
  // applied to every factor from the public perspective.
  void step(const LastMove& effect);

 private:
  GameConfig cfg_;
  std::array<HandBelief, kMaxPlayers> factors_;
  uint64_t logHash_ = 0x9ae16a3b2f90404fULL;
  int turn_ = 0;
};

PublicBelief initPublicBeliefs(const GameConfig& cfg);

// Spec-facing wrappers -------------------------------------------------

// Environment factor for a single hand belief. The observation must carry
// lastMove and be taken from the owner's own viewpoint for PrivateView
// beliefs (draw identities of other players are consumed).
void stepObservation(HandBelief& b, const Observation& obs);
void stepObservation(PublicBelief& b, const Observation& obs);

// Policy factor: zero (or soften) hands for which the actor's policy would
// not have produced the observed action.
void stepPolicy(HandBelief& b, PolicyConstraint constraint);

// Public -> private conversion: subtract every card the observer privately
// sees from the counts of the observer's own public factor.
HandBelief conditionOnAoh(const HandBelief& publicOverOwn,
                          const Observation& privateView);

// Draws the owner's hand from the belief and shuffles all remaining unseen
// cards into a deck to rebuild a full state consistent with the view.
GameState sampleDeterminization(const HandBelief& b, const Observation& view,
                                Rng& rng);
GameState sampleDeterminization(const HandSampler& sampler, const HandBelief& b,
                                const Observation& view, Rng& rng);

}  // namespace hanabi
