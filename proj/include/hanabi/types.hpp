#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "hanabi/error.hpp"

namespace hanabi {

inline constexpr int kMaxPlayers = 5;
inline constexpr int kMaxColors = 5;
inline constexpr int kMaxRank = 5;
inline constexpr int kMaxTypes = kMaxColors * kMaxRank;
inline constexpr int kMaxHand = 5;
inline constexpr int kMaxDeck = 60;

inline constexpr char kColorLetters[kMaxColors + 1] = "RYGWB";

// rank is 1-based; color is an index < config.colors.
struct Card {
  uint8_t color = 0;
  uint8_t rank = 0;

  bool operator==(const Card&) const = default;
  // (color, rank) order; also the canonical card order used everywhere.
  auto operator<=>(const Card&) const = default;
};

struct GameConfig {
  uint8_t numPlayers = 2;
  uint8_t colors = 5;
  uint8_t maxRank = 5;
  uint8_t handSize = 0;  // 0 = standard for the player count (5/5/4/4)
  uint8_t hintTokensMax = 8;
  uint8_t lifeTokens = 3;
  std::array<uint8_t, kMaxRank> rankMultiplicity = {3, 2, 2, 2, 1};
  bool bombZeroScore = true;
  double discount = 1.0;

  int effectiveHandSize() const {
    if (handSize != 0) return handSize;
    return numPlayers <= 3 ? 5 : 4;
  }

  int deckSize() const {
    int perColor = 0;
    for (int r = 0; r < maxRank; ++r) perColor += rankMultiplicity[r];
    return perColor * colors;
  }

  int numTypes() const { return colors * maxRank; }

  int typeIndex(Card c) const { return c.color * maxRank + (c.rank - 1); }

  Card cardFromType(int t) const {
    return Card{static_cast<uint8_t>(t / maxRank),
                static_cast<uint8_t>(t % maxRank + 1)};
  }

  int maxScore() const { return colors * maxRank; }

  void validate() const {
    if (numPlayers < 2 || numPlayers > kMaxPlayers)
      throw ConfigError("numPlayers must be in 2..5");
    if (colors < 1 || colors > kMaxColors)
      throw ConfigError("colors must be in 1..5");
    if (maxRank < 1 || maxRank > kMaxRank)
      throw ConfigError("maxRank must be in 1..5");
    for (int r = 0; r < maxRank; ++r)
      if (rankMultiplicity[r] == 0)
        throw ConfigError("rankMultiplicity entries must be positive");
    if (effectiveHandSize() < 1 || effectiveHandSize() > kMaxHand)
      throw ConfigError("hand size must be in 1..5");
    if (hintTokensMax < 1) throw ConfigError("hintTokensMax must be positive");
    if (lifeTokens < 1) throw ConfigError("lifeTokens must be positive");
    if (deckSize() > kMaxDeck) throw ConfigError("deck exceeds capacity");
    if (effectiveHandSize() * numPlayers > deckSize())
      throw ConfigError("hand_size x players exceeds deck size");
    if (!(discount > 0.0 && discount <= 1.0))
      throw ConfigError("discount must be in (0, 1]");
  }

  bool operator==(const GameConfig&) const = default;
};

enum class MoveType : uint8_t { Play, Discard, HintColor, HintRank };

struct Move {
  MoveType type = MoveType::Play;
  // Play/Discard: a = slot. Hints: a = target player, b = color or rank.
  int8_t a = 0;
  int8_t b = 0;

  static Move play(int slot) { return {MoveType::Play, static_cast<int8_t>(slot), 0}; }
  static Move discard(int slot) { return {MoveType::Discard, static_cast<int8_t>(slot), 0}; }
  static Move hintColor(int target, int color) {
    return {MoveType::HintColor, static_cast<int8_t>(target), static_cast<int8_t>(color)};
  }
  static Move hintRank(int target, int rank) {
    return {MoveType::HintRank, static_cast<int8_t>(target), static_cast<int8_t>(rank)};
  }

  bool operator==(const Move&) const = default;
  auto operator<=>(const Move&) const = default;
};

inline std::string toString(Card c) {
  std::string s;
  s += kColorLetters[c.color];
  s += static_cast<char>('0' + c.rank);
  return s;
}

inline std::string toString(Move m) {
  switch (m.type) {
    case MoveType::Play:
      return "P" + std::to_string(m.a);
    case MoveType::Discard:
      return "D" + std::to_string(m.a);
    case MoveType::HintColor:
      return std::string("HC") + std::to_string(m.a) + kColorLetters[m.b];
    case MoveType::HintRank:
      return std::string("HR") + std::to_string(m.a) + static_cast<char>('0' + m.b);
  }
  return "?";
}

Card cardFromString(const std::string& s);
Move moveFromString(const std::string& s);

}  // namespace hanabi
