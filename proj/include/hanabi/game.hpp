#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hanabi/rng.hpp"
#include "hanabi/types.hpp"

namespace hanabi {

// Per-slot public knowledge. mask bits are card-type indices; hintFlags
// records whether a color/rank hint ever touched the slot. drawTurn orders
// slots by age (initial deal = 0); newest = highest (drawTurn, slot).
struct Slot {
  Card card;
  uint32_t mask = 0;
  uint8_t hintFlags = 0;  // bit 0 = color hinted, bit 1 = rank hinted
  int16_t drawTurn = 0;

  bool colorHinted() const { return hintFlags & 1; }
  bool rankHinted() const { return hintFlags & 2; }
};

enum class TerminalReason : uint8_t { None, BombedOut, AllStacksComplete, OutOfTurns };

// Full Markov state. Trivially copyable by design: rollouts clone it with a
// plain copy. The public hint-derived slot metadata is carried inline since
// it is a deterministic function of the public log.
struct GameState {
  GameConfig config;
  std::array<Card, kMaxDeck> deck{};  // deck[deckHead..deckAll) not yet drawn
  uint8_t deckHead = 0;
  uint8_t deckAll = 0;
  std::array<std::array<Slot, kMaxHand>, kMaxPlayers> hands{};
  std::array<uint8_t, kMaxPlayers> handSize{};
  std::array<uint8_t, kMaxColors> fireworks{};
  std::array<uint8_t, kMaxTypes> discards{};
  uint8_t hintTokens = 0;
  uint8_t lifeTokens = 0;
  uint8_t currentPlayer = 0;
  int16_t turn = 0;
  int8_t finalCountdown = -1;  // -1 = deck not yet exhausted
  uint8_t pointsPlayed = 0;
  TerminalReason terminal = TerminalReason::None;

  int deckRemaining() const { return deckAll - deckHead; }
  bool isTerminal() const { return terminal != TerminalReason::None; }
  uint32_t fullMask() const { return (uint32_t{1} << config.numTypes()) - 1; }
};

// What one move did, as seen by one observer. `drawn` is the replacement
// card's identity where visible (never for the actor's own draw).
struct LastMove {
  int8_t actor = 0;
  Move move;
  uint8_t hintMask = 0;
  std::optional<Card> revealed;  // play/discard identity, public
  std::optional<Card> drawn;
  bool drew = false;
  int8_t replacedSlot = -1;
  bool handShrank = false;  // no card left to draw; slot removed
  bool successfulPlay = false;
  bool strike = false;
};

// o^i = Z(s, i): everything player i can see. Own card identities are never
// present (hands[observer] entries carry an invalid card).
struct Observation {
  GameConfig config;
  int8_t observer = 0;
  int8_t currentPlayer = 0;
  int16_t turn = 0;
  int8_t finalCountdown = -1;
  uint8_t hintTokens = 0;
  uint8_t lifeTokens = 0;
  uint8_t deckRemaining = 0;
  uint8_t pointsPlayed = 0;
  TerminalReason terminal = TerminalReason::None;
  std::array<uint8_t, kMaxColors> fireworks{};
  std::array<uint8_t, kMaxTypes> discards{};
  std::array<uint8_t, kMaxPlayers> handSize{};
  // Slot metadata is public for everyone; card identities are blanked for
  // the observer's own hand.
  std::array<std::array<Slot, kMaxHand>, kMaxPlayers> hands{};
  std::optional<LastMove> lastMove;

  bool seesHandOf(int p) const { return p != observer; }
};

struct MoveResult {
  double reward = 0.0;
  LastMove effect;  // observer-independent fields; `drawn` filled with the
                    // true identity (callers blank it per observer)
};

GameState newGame(const GameConfig& config, uint64_t seed);

// Same dealing procedure as newGame but from an explicit deck order; used by
// the brute-force oracle and table-policy crawler.
GameState gameFromDeck(const GameConfig& config, std::span<const Card> order);

bool isMoveLegal(const GameState& s, Move m);

// Canonical order: plays by slot, discards by slot, then hints grouped by
// target (seat order, skipping the actor), color hints before rank hints.
std::vector<Move> legalMoves(const GameState& s);
int countLegalMoves(const GameState& s);
void legalMoves(const GameState& s, std::vector<Move>& out);

// Applies in place; returns reward (+1 per successful play; on a bomb-out
// with bombZeroScore a terminal adjustment of -pointsPlayed keeps the
// cumulative reward equal to the final score).
MoveResult applyMove(GameState& s, Move m);

Observation observe(const GameState& s, int player);

// Card-type bits matching a hint move (all types of its color or rank).
uint32_t typeMaskForHint(const GameConfig& cfg, Move hint);

int score(const GameState& s);

// Multiset of all cards in deck + hands + discards + fireworks-implied
// plays; used by the conservation property test.
std::array<int, kMaxTypes> cardCensus(const GameState& s);

std::string debugString(const GameState& s);

}  // namespace hanabi
