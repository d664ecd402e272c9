#include "hanabi/game.hpp"

#include <algorithm>
#include <sstream>

#include "hanabi/error.hpp"

namespace hanabi {

Card cardFromString(const std::string& s) {
  if (s.size() != 2) throw Error("bad card string: " + s);
  const char* p = std::char_traits<char>::find(kColorLetters, kMaxColors, s[0]);
  if (!p || s[1] < '1' || s[1] > '5') throw Error("bad card string: " + s);
  return Card{static_cast<uint8_t>(p - kColorLetters),
              static_cast<uint8_t>(s[1] - '0')};
}

Move moveFromString(const std::string& s) {
  if (s.size() >= 2 && (s[0] == 'P' || s[0] == 'D')) {
    int slot = std::stoi(s.substr(1));
    return s[0] == 'P' ? Move::play(slot) : Move::discard(slot);
  }
  if (s.size() >= 4 && s[0] == 'H' && (s[1] == 'C' || s[1] == 'R')) {
    int target = s[2] - '0';
    if (s[1] == 'C') {
      const char* p = std::char_traits<char>::find(kColorLetters, kMaxColors, s[3]);
      if (!p) throw Error("bad move string: " + s);
      return Move::hintColor(target, static_cast<int>(p - kColorLetters));
    }
    return Move::hintRank(target, s[3] - '0');
  }
  throw Error("bad move string: " + s);
}

namespace {

uint32_t colorMask(const GameConfig& cfg, int color) {
  uint32_t m = 0;
  for (int r = 1; r <= cfg.maxRank; ++r)
    m |= uint32_t{1} << cfg.typeIndex(Card{static_cast<uint8_t>(color), static_cast<uint8_t>(r)});
  return m;
}

uint32_t rankMask(const GameConfig& cfg, int rank) {
  uint32_t m = 0;
  for (int c = 0; c < cfg.colors; ++c)
    m |= uint32_t{1} << cfg.typeIndex(Card{static_cast<uint8_t>(c), static_cast<uint8_t>(rank)});
  return m;
}

void maybeStartOrAdvanceCountdown(GameState& s) {
  if (s.deckRemaining() > 0) return;
  if (s.finalCountdown < 0)
    s.finalCountdown = static_cast<int8_t>(s.config.numPlayers);
  else if (s.finalCountdown > 0)
    --s.finalCountdown;
}

void drawInto(GameState& s, int player, int slot) {
  auto& hand = s.hands[player];
  if (s.deckRemaining() > 0) {
    hand[slot] = Slot{s.deck[s.deckHead++], s.fullMask(), 0,
                      static_cast<int16_t>(s.turn + 1)};
  } else {
    // Hand shrinks; later slots shift down to stay contiguous.
    for (int i = slot; i + 1 < s.handSize[player]; ++i) hand[i] = hand[i + 1];
    --s.handSize[player];
  }
}

}  // namespace

GameState newGame(const GameConfig& config, uint64_t seed) {
  config.validate();
  GameState s;
  s.config = config;
  int n = 0;
  for (int c = 0; c < config.colors; ++c)
    for (int r = 1; r <= config.maxRank; ++r)
      for (int k = 0; k < config.rankMultiplicity[r - 1]; ++k)
        s.deck[n++] = Card{static_cast<uint8_t>(c), static_cast<uint8_t>(r)};
  s.deckAll = static_cast<uint8_t>(n);

  Rng rng(mixSeed(seed, 0x68616e61ULL));  // deck-shuffle stream
  shuffle(std::span<Card>(s.deck.data(), n), rng);

  int hs = config.effectiveHandSize();
  // Round-robin deal: one card per player per pass, slot-major.
  for (int slot = 0; slot < hs; ++slot)
    for (int p = 0; p < config.numPlayers; ++p)
      s.hands[p][slot] = Slot{s.deck[s.deckHead++], s.fullMask(), 0, 0};
  for (int p = 0; p < config.numPlayers; ++p)
    s.handSize[p] = static_cast<uint8_t>(hs);

  s.hintTokens = config.hintTokensMax;
  s.lifeTokens = config.lifeTokens;
  if (s.deckRemaining() == 0)
    s.finalCountdown = static_cast<int8_t>(config.numPlayers);
  return s;
}

GameState gameFromDeck(const GameConfig& config, std::span<const Card> order) {
  config.validate();
  if (static_cast<int>(order.size()) != config.deckSize())
    throw ConfigError("deck order has wrong size");
  GameState s;
  s.config = config;
  for (size_t i = 0; i < order.size(); ++i) s.deck[i] = order[i];
  s.deckAll = static_cast<uint8_t>(order.size());
  int hs = config.effectiveHandSize();
  for (int slot = 0; slot < hs; ++slot)
    for (int p = 0; p < config.numPlayers; ++p)
      s.hands[p][slot] = Slot{s.deck[s.deckHead++], s.fullMask(), 0, 0};
  for (int p = 0; p < config.numPlayers; ++p)
    s.handSize[p] = static_cast<uint8_t>(hs);
  s.hintTokens = config.hintTokensMax;
  s.lifeTokens = config.lifeTokens;
  if (s.deckRemaining() == 0)
    s.finalCountdown = static_cast<int8_t>(config.numPlayers);
  return s;
}

bool isMoveLegal(const GameState& s, Move m) {
  if (s.isTerminal()) return false;
  int actor = s.currentPlayer;
  switch (m.type) {
    case MoveType::Play:
      return m.a >= 0 && m.a < s.handSize[actor];
    case MoveType::Discard:
      return m.a >= 0 && m.a < s.handSize[actor] &&
             s.hintTokens < s.config.hintTokensMax;
    case MoveType::HintColor:
    case MoveType::HintRank: {
      if (s.hintTokens == 0) return false;
      if (m.a == actor || m.a < 0 || m.a >= s.config.numPlayers) return false;
      if (m.type == MoveType::HintColor && m.b >= s.config.colors) return false;
      if (m.type == MoveType::HintRank && (m.b < 1 || m.b > s.config.maxRank)) return false;
      for (int i = 0; i < s.handSize[m.a]; ++i) {
        const Card& c = s.hands[m.a][i].card;
        if (m.type == MoveType::HintColor ? c.color == m.b : c.rank == m.b)
          return true;
      }
      return false;  // empty-match hints are illegal
    }
  }
  return false;
}

void legalMoves(const GameState& s, std::vector<Move>& out) {
  out.clear();
  if (s.isTerminal()) throw StateError("legalMoves on terminal state");
  int actor = s.currentPlayer;
  for (int i = 0; i < s.handSize[actor]; ++i) out.push_back(Move::play(i));
  if (s.hintTokens < s.config.hintTokensMax)
    for (int i = 0; i < s.handSize[actor]; ++i) out.push_back(Move::discard(i));
  if (s.hintTokens > 0) {
    for (int t = 0; t < s.config.numPlayers; ++t) {
      if (t == actor) continue;
      uint32_t colors = 0, ranks = 0;
      for (int i = 0; i < s.handSize[t]; ++i) {
        colors |= uint32_t{1} << s.hands[t][i].card.color;
        ranks |= uint32_t{1} << s.hands[t][i].card.rank;
      }
      for (int c = 0; c < s.config.colors; ++c)
        if (colors & (uint32_t{1} << c)) out.push_back(Move::hintColor(t, c));
      for (int r = 1; r <= s.config.maxRank; ++r)
        if (ranks & (uint32_t{1} << r)) out.push_back(Move::hintRank(t, r));
    }
  }
}

std::vector<Move> legalMoves(const GameState& s) {
  std::vector<Move> out;
  legalMoves(s, out);
  return out;
}

int countLegalMoves(const GameState& s) {
  std::vector<Move> out;
  legalMoves(s, out);
  return static_cast<int>(out.size());
}

MoveResult applyMove(GameState& s, Move m) {
  if (s.isTerminal()) throw StateError("applyMove on terminal state");
  if (!isMoveLegal(s, m))
    throw IllegalMoveError("illegal move " + toString(m) + " for player " +
                           std::to_string(s.currentPlayer));
  MoveResult res;
  res.effect.actor = static_cast<int8_t>(s.currentPlayer);
  res.effect.move = m;
  int actor = s.currentPlayer;

  switch (m.type) {
    case MoveType::Play: {
      Card c = s.hands[actor][m.a].card;
      res.effect.revealed = c;
      res.effect.replacedSlot = m.a;
      if (s.fireworks[c.color] + 1 == c.rank) {
        ++s.fireworks[c.color];
        ++s.pointsPlayed;
        res.reward += 1.0;
        res.effect.successfulPlay = true;
        if (c.rank == s.config.maxRank && s.hintTokens < s.config.hintTokensMax)
          ++s.hintTokens;
      } else {
        --s.lifeTokens;
        ++s.discards[s.config.typeIndex(c)];
        res.effect.strike = true;
      }
      res.effect.drew = s.deckRemaining() > 0;
      if (res.effect.drew) res.effect.drawn = s.deck[s.deckHead];
      res.effect.handShrank = !res.effect.drew;
      drawInto(s, actor, m.a);
      break;
    }
    case MoveType::Discard: {
      Card c = s.hands[actor][m.a].card;
      res.effect.revealed = c;
      res.effect.replacedSlot = m.a;
      ++s.discards[s.config.typeIndex(c)];
      ++s.hintTokens;
      res.effect.drew = s.deckRemaining() > 0;
      if (res.effect.drew) res.effect.drawn = s.deck[s.deckHead];
      res.effect.handShrank = !res.effect.drew;
      drawInto(s, actor, m.a);
      break;
    }
    case MoveType::HintColor:
    case MoveType::HintRank: {
      --s.hintTokens;
      bool byColor = m.type == MoveType::HintColor;
      uint32_t typeBits =
          byColor ? colorMask(s.config, m.b) : rankMask(s.config, m.b);
      for (int i = 0; i < s.handSize[m.a]; ++i) {
        Slot& slot = s.hands[m.a][i];
        bool match = byColor ? slot.card.color == m.b : slot.card.rank == m.b;
        if (match) {
          res.effect.hintMask |= uint8_t{1} << i;
          slot.mask &= typeBits;
          slot.hintFlags |= byColor ? 1 : 2;
        } else {
          slot.mask &= ~typeBits;
        }
      }
      break;
    }
  }

  ++s.turn;
  s.currentPlayer = static_cast<uint8_t>((actor + 1) % s.config.numPlayers);
  maybeStartOrAdvanceCountdown(s);

  if (s.lifeTokens == 0) {
    s.terminal = TerminalReason::BombedOut;
    if (s.config.bombZeroScore) res.reward -= s.pointsPlayed;
  } else if (s.pointsPlayed == s.config.maxScore()) {
    s.terminal = TerminalReason::AllStacksComplete;
  } else if (s.finalCountdown == 0) {
    s.terminal = TerminalReason::OutOfTurns;
  }
  return res;
}

Observation observe(const GameState& s, int player) {
  if (player < 0 || player >= s.config.numPlayers)
    throw StateError("observe: bad player index");
  Observation o;
  o.config = s.config;
  o.observer = static_cast<int8_t>(player);
  o.currentPlayer = static_cast<int8_t>(s.currentPlayer);
  o.turn = s.turn;
  o.finalCountdown = s.finalCountdown;
  o.hintTokens = s.hintTokens;
  o.lifeTokens = s.lifeTokens;
  o.deckRemaining = static_cast<uint8_t>(s.deckRemaining());
  o.pointsPlayed = s.pointsPlayed;
  o.terminal = s.terminal;
  o.fireworks = s.fireworks;
  o.discards = s.discards;
  o.handSize = s.handSize;
  for (int p = 0; p < s.config.numPlayers; ++p) {
    for (int i = 0; i < s.handSize[p]; ++i) {
      o.hands[p][i] = s.hands[p][i];
      if (p == player) o.hands[p][i].card = Card{255, 0};  // own identity hidden
    }
  }
  return o;
}

int score(const GameState& s) {
  if (s.terminal == TerminalReason::BombedOut && s.config.bombZeroScore) return 0;
  int total = 0;
  for (int c = 0; c < s.config.colors; ++c) total += s.fireworks[c];
  return total;
}

std::array<int, kMaxTypes> cardCensus(const GameState& s) {
  std::array<int, kMaxTypes> census{};
  for (int i = s.deckHead; i < s.deckAll; ++i)
    ++census[s.config.typeIndex(s.deck[i])];
  for (int p = 0; p < s.config.numPlayers; ++p)
    for (int i = 0; i < s.handSize[p]; ++i)
      ++census[s.config.typeIndex(s.hands[p][i].card)];
  for (int t = 0; t < s.config.numTypes(); ++t) census[t] += s.discards[t];
  for (int c = 0; c < s.config.colors; ++c)
    for (int r = 1; r <= s.fireworks[c]; ++r)
      ++census[s.config.typeIndex(Card{static_cast<uint8_t>(c), static_cast<uint8_t>(r)})];
  return census;
}

std::string debugString(const GameState& s) {
  std::ostringstream os;
  os << "turn=" << s.turn << " player=" << int(s.currentPlayer)
     << " hints=" << int(s.hintTokens) << " lives=" << int(s.lifeTokens)
     << " deck=" << s.deckRemaining() << " fw=";
  for (int c = 0; c < s.config.colors; ++c) os << int(s.fireworks[c]);
  for (int p = 0; p < s.config.numPlayers; ++p) {
    os << " h" << p << "=";
    for (int i = 0; i < s.handSize[p]; ++i) os << toString(s.hands[p][i].card);
  }
  return os.str();
}

}  // namespace hanabi
