#pragma once

#include <functional>
#include <memory>
#include <string>
#include <unordered_map>

#include "hanabi/view.hpp"

namespace hanabi {

// Deterministic policy over an agent's action-observation history. Policies
// are stateless and shareable across threads; every returned move must be
// legal for the viewer's current position.
class BlueprintPolicy {
 public:
  virtual ~BlueprintPolicy() = default;
  virtual std::string name() const = 0;
  virtual bool supportsPlayers(int n) const = 0;
  // History-dependent policies require view.log()/aohKey().
  virtual bool needsHistory() const { return false; }
  // Whether act() is meaningful on hypothesis-patched views, which belief
  // filtering requires.
  virtual bool supportsHypotheticalViews() const { return true; }
  virtual Move act(const AgentView& view) const = 0;
};

// Priority-ladder bot: (1) play a provably playable slot, (2) hint the next
// partner's newest playable un-hinted card (rank first), (3) discard provable
// chaff, (4) discard the oldest slot. Ties break toward the lowest
// slot/target/color index.
class SimpleBot : public BlueprintPolicy {
 public:
  std::string name() const override { return "simple"; }
  bool supportsPlayers(int n) const override { return n >= 2 && n <= kMaxPlayers; }
  Move act(const AgentView& view) const override;
};

// Modulo-coded recommendation bot for 3+ players. One hint simultaneously
// transmits a recommended action to every other player: the hinter encodes
// the sum of all partners' recommendation indices mod H into a public
// alphabet of (target offset, hint type) pairs, and each receiver recovers
// their own index by subtracting the indices they can see.
class HatBot : public BlueprintPolicy {
 public:
  std::string name() const override { return "hat"; }
  bool supportsPlayers(int n) const override { return n >= 3 && n <= kMaxPlayers; }
  bool needsHistory() const override { return true; }
  bool supportsHypotheticalViews() const override { return false; }
  Move act(const AgentView& view) const override;

  // Exposed for the decode-consistency tests.
  static int alphabetSize(int numPlayers) { return 2 * (numPlayers - 1); }
  static int decodeRecommendation(int total, int seenSum, int alphabet) {
    int h = alphabet;
    return ((total - seenSum) % h + h) % h;
  }
  // Recommendation index for a visibly held hand (public heuristic).
  static int recommendFor(const AgentView& view, int player, int alphabet);
  // The code the hinter would send right now.
  static int encodeCode(const AgentView& view, int alphabet);
  static Move codeToHint(const AgentView& view, int code, int alphabet);
  static int hintToCode(const GameConfig& cfg, int hinter, Move hint, int alphabet);
  // The viewer's decoded recommendation, or -1 if stale/none.
  static int currentRecommendation(const AgentView& view);
};

// AOH -> move map, the exact-oracle blueprint. Keys are canonical AOH
// strings (see aohKeyStart/aohKeyAppend).
class TablePolicy : public BlueprintPolicy {
 public:
  TablePolicy(std::string name, std::unordered_map<std::string, Move> table,
              int players)
      : name_(std::move(name)), table_(std::move(table)), players_(players) {}

  std::string name() const override { return name_; }
  bool supportsPlayers(int n) const override { return n == players_; }
  bool needsHistory() const override { return true; }
  Move act(const AgentView& view) const override;

  const std::unordered_map<std::string, Move>& table() const { return table_; }

  void saveJsonl(const std::string& path) const;
  static TablePolicy loadJsonl(const std::string& path, int players,
                               const std::string& name = "table");

 private:
  std::string name_;
  std::unordered_map<std::string, Move> table_;
  int players_;
};

// Canonical AOH string encoding. The start section lists visible initial
// hands ("??" for the viewer's own); each event appends the move, the hint
// mask, revealed identities and draws as seen by the viewer.
std::string aohKeyStart(const GameConfig& cfg,
                        const std::array<std::array<Card, kMaxHand>, kMaxPlayers>& hands,
                        int handSize, int viewer);
void aohKeyAppend(std::string& key, const LogEvent& e, int viewer);

// Visits every distinct deck order of the config (multiset permutations,
// uniform over physical shuffles when weighted by falling counts).
void forEachDeckOrder(const GameConfig& cfg,
                      const std::function<void(const std::vector<Card>&)>& fn);

// Crawls every AOH reachable in self-play of `base` from any deal of the
// config, recording base's choice. The result is a total table policy on
// the reachable set, used to pin oracle mini-games.
TablePolicy crawlTablePolicy(const GameConfig& cfg, const BlueprintPolicy& base,
                             const std::string& name = "table");

std::unique_ptr<BlueprintPolicy> makeBlueprint(const std::string& spec, int players);

}  // namespace hanabi
