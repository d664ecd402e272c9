#pragma once

#include <string>
#include <vector>

#include "hanabi/game.hpp"

namespace hanabi {

// One public-log entry. `drawn` holds the true identity; viewers must go
// through AgentView/renderers, which hide a player's own draws.
struct LogEvent {
  int16_t turn = 0;
  int8_t actor = 0;
  Move move;
  uint8_t hintMask = 0;
  bool hasRevealed = false;
  Card revealed;
  bool drew = false;
  Card drawn;
  int8_t replacedSlot = -1;
  bool handShrank = false;
  // Public context at the time of the move, for policies that re-derive
  // protocol state from the log.
  std::array<uint8_t, kMaxColors> fireworksBefore{};
  std::array<uint8_t, kMaxTypes> discardsBefore{};
  uint8_t hintTokensBefore = 0;
};

// Full game log plus the initial deal. Only real games and oracle replays
// carry one; rollouts skip it unless a policy needs history.
struct GameLog {
  GameConfig config;
  std::array<std::array<Card, kMaxHand>, kMaxPlayers> initialHands{};
  uint8_t initialHandSize = 0;
  std::vector<LogEvent> events;

  static GameLog start(const GameState& s) {
    GameLog log;
    log.config = s.config;
    log.initialHandSize = s.handSize[0];
    for (int p = 0; p < s.config.numPlayers; ++p)
      for (int i = 0; i < s.handSize[p]; ++i)
        log.initialHands[p][i] = s.hands[p][i].card;
    return log;
  }

  void record(const GameState& before, const MoveResult& res) {
    LogEvent e;
    e.turn = before.turn;
    e.actor = res.effect.actor;
    e.move = res.effect.move;
    e.hintMask = res.effect.hintMask;
    e.hasRevealed = res.effect.revealed.has_value();
    if (e.hasRevealed) e.revealed = *res.effect.revealed;
    e.drew = res.effect.drew;
    if (e.drew) e.drawn = *res.effect.drawn;
    e.replacedSlot = res.effect.replacedSlot;
    e.handShrank = res.effect.handShrank;
    e.fireworksBefore = before.fireworks;
    e.discardsBefore = before.discards;
    e.hintTokensBefore = before.hintTokens;
    events.push_back(e);
  }
};

// A policy's window onto the game: everything in the viewer's AOH and
// nothing else. Backed either by a GameState (rollout fast path) or by an
// Observation (real turns and hypothesis evaluation). An optional patch
// substitutes a hypothetical hand for one player, which is how beliefs ask
// "what would the actor have done if this player held h".
class AgentView {
 public:
  AgentView(const GameState& s, int viewer)
      : state_(&s), viewer_(viewer) {}
  AgentView(const Observation& o)
      : obs_(&o), viewer_(o.observer) {}

  void patchHand(int player, const Card* cards, int count) {
    patchPlayer_ = player;
    patchCards_ = cards;
    patchCount_ = count;
  }
  void attachLog(const GameLog* log) { log_ = log; }
  void setAohKey(std::string key) { aohKey_ = std::move(key); }

  const GameConfig& config() const { return state_ ? state_->config : obs_->config; }
  int viewer() const { return viewer_; }
  int players() const { return config().numPlayers; }
  int currentPlayer() const { return state_ ? state_->currentPlayer : obs_->currentPlayer; }
  int turn() const { return state_ ? state_->turn : obs_->turn; }
  int hintTokens() const { return state_ ? state_->hintTokens : obs_->hintTokens; }
  int lifeTokens() const { return state_ ? state_->lifeTokens : obs_->lifeTokens; }
  int deckRemaining() const { return state_ ? state_->deckRemaining() : obs_->deckRemaining; }
  int fireworks(int color) const {
    return state_ ? state_->fireworks[color] : obs_->fireworks[color];
  }
  int discarded(int type) const {
    return state_ ? state_->discards[type] : obs_->discards[type];
  }
  int handSize(int p) const { return state_ ? state_->handSize[p] : obs_->handSize[p]; }

  // Public slot metadata (mask, hint flags, draw turn) for any player.
  const Slot& slotMeta(int p, int i) const {
    return state_ ? state_->hands[p][i] : obs_->hands[p][i];
  }

  // Card identity; must not be called for the viewer's own hand.
  Card cardOf(int p, int i) const {
    if (patchPlayer_ == p && i < patchCount_) return patchCards_[i];
    return slotMeta(p, i).card;
  }

  const GameLog* log() const { return log_; }
  const std::string& aohKey() const { return aohKey_; }

 private:
  const GameState* state_ = nullptr;
  const Observation* obs_ = nullptr;
  int viewer_ = 0;
  const Card* patchCards_ = nullptr;
  int patchPlayer_ = -1;
  int patchCount_ = 0;
  const GameLog* log_ = nullptr;
  std::string aohKey_;
};

// Legal moves for the current player computed from a view (identical to
// legalMoves on the backing state; usable with a patched hand).
void legalMovesFromView(const AgentView& v, std::vector<Move>& out);
int countLegalMovesFromView(const AgentView& v);

}  // namespace hanabi
