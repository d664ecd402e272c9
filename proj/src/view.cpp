#include "hanabi/view.hpp"

namespace hanabi {

void legalMovesFromView(const AgentView& v, std::vector<Move>& out) {
  out.clear();
  const GameConfig& cfg = v.config();
  int actor = v.currentPlayer();
  for (int i = 0; i < v.handSize(actor); ++i) out.push_back(Move::play(i));
  if (v.hintTokens() < cfg.hintTokensMax)
    for (int i = 0; i < v.handSize(actor); ++i) out.push_back(Move::discard(i));
  if (v.hintTokens() > 0) {
    for (int t = 0; t < cfg.numPlayers; ++t) {
      if (t == actor) continue;
      uint32_t colors = 0, ranks = 0;
      for (int i = 0; i < v.handSize(t); ++i) {
        Card c = v.cardOf(t, i);
        colors |= uint32_t{1} << c.color;
        ranks |= uint32_t{1} << c.rank;
      }
      for (int c = 0; c < cfg.colors; ++c)
        if (colors & (uint32_t{1} << c)) out.push_back(Move::hintColor(t, c));
      for (int r = 1; r <= cfg.maxRank; ++r)
        if (ranks & (uint32_t{1} << r)) out.push_back(Move::hintRank(t, r));
    }
  }
}

int countLegalMovesFromView(const AgentView& v) {
  const GameConfig& cfg = v.config();
  int actor = v.currentPlayer();
  int n = v.handSize(actor);
  if (v.hintTokens() < cfg.hintTokensMax) n += v.handSize(actor);
  if (v.hintTokens() > 0) {
    for (int t = 0; t < cfg.numPlayers; ++t) {
      if (t == actor) continue;
      uint32_t colors = 0, ranks = 0;
      for (int i = 0; i < v.handSize(t); ++i) {
        Card c = v.cardOf(t, i);
        colors |= uint32_t{1} << c.color;
        ranks |= uint32_t{1} << c.rank;
      }
      n += __builtin_popcount(colors) + __builtin_popcount(ranks);
    }
  }
  return n;
}

}  // namespace hanabi
