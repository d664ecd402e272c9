#include "hanabi/blueprint.hpp"

#include <algorithm>
#include <fstream>

#include "hanabi/error.hpp"
#include "nlohmann/json.hpp"

namespace hanabi {

namespace {

uint32_t playableTypes(const GameConfig& cfg, const uint8_t* fireworks) {
  uint32_t m = 0;
  for (int c = 0; c < cfg.colors; ++c)
    if (fireworks[c] < cfg.maxRank)
      m |= uint32_t{1} << cfg.typeIndex(Card{static_cast<uint8_t>(c),
                                             static_cast<uint8_t>(fireworks[c] + 1)});
  return m;
}

// A type is dead when its stack has passed it or some lower rank of its
// color has no copies left outside the discard pile.
uint32_t uselessTypes(const GameConfig& cfg, const uint8_t* fireworks,
                      const uint8_t* discards) {
  uint32_t m = 0;
  for (int c = 0; c < cfg.colors; ++c) {
    int reachable = cfg.maxRank;
    for (int r = fireworks[c] + 1; r <= cfg.maxRank; ++r) {
      int t = cfg.typeIndex(Card{static_cast<uint8_t>(c), static_cast<uint8_t>(r)});
      if (discards[t] >= cfg.rankMultiplicity[r - 1]) {
        reachable = r - 1;
        break;
      }
    }
    for (int r = 1; r <= cfg.maxRank; ++r)
      if (r <= fireworks[c] || r > reachable)
        m |= uint32_t{1} << cfg.typeIndex(Card{static_cast<uint8_t>(c),
                                               static_cast<uint8_t>(r)});
  }
  return m;
}

bool isPlayable(const GameConfig& cfg, const uint8_t* fireworks, Card c) {
  return fireworks[c.color] + 1 == c.rank;
}

}  // namespace

Move SimpleBot::act(const AgentView& view) const {
  const GameConfig& cfg = view.config();
  int me = view.viewer();
  uint8_t fireworks[kMaxColors];
  uint8_t discards[kMaxTypes];
  for (int c = 0; c < cfg.colors; ++c)
    fireworks[c] = static_cast<uint8_t>(view.fireworks(c));
  for (int t = 0; t < cfg.numTypes(); ++t)
    discards[t] = static_cast<uint8_t>(view.discarded(t));

  // (1) play a slot whose mask proves it playable
  uint32_t playable = playableTypes(cfg, fireworks);
  for (int i = 0; i < view.handSize(me); ++i) {
    uint32_t mask = view.slotMeta(me, i).mask;
    if (mask != 0 && (mask & ~playable) == 0) return Move::play(i);
  }

  // (2) hint the newest playable, not-fully-hinted card of the first partner
  // holding one (rank before color)
  if (view.hintTokens() > 0) {
    for (int off = 1; off < view.players(); ++off) {
      int t = (me + off) % view.players();
      int best = -1;
      for (int i = 0; i < view.handSize(t); ++i) {
        const Slot& meta = view.slotMeta(t, i);
        if (meta.colorHinted() && meta.rankHinted()) continue;
        if (!isPlayable(cfg, fireworks, view.cardOf(t, i))) continue;
        if (best < 0 || meta.drawTurn > view.slotMeta(t, best).drawTurn) best = i;
      }
      if (best >= 0) {
        Card c = view.cardOf(t, best);
        if (!view.slotMeta(t, best).rankHinted()) return Move::hintRank(t, c.rank);
        return Move::hintColor(t, c.color);
      }
    }
  }

  bool canDiscard = view.hintTokens() < cfg.hintTokensMax;

  // (3) discard a slot whose mask proves it useless
  if (canDiscard) {
    uint32_t useless = uselessTypes(cfg, fireworks, discards);
    for (int i = 0; i < view.handSize(me); ++i) {
      uint32_t mask = view.slotMeta(me, i).mask;
      if (mask != 0 && (mask & ~useless) == 0) return Move::discard(i);
    }
  }

  // (4) discard the oldest slot
  if (canDiscard) {
    int oldest = 0;
    for (int i = 1; i < view.handSize(me); ++i)
      if (view.slotMeta(me, i).drawTurn < view.slotMeta(me, oldest).drawTurn)
        oldest = i;
    return Move::discard(oldest);
  }

  // Tokens full and nothing provable: first legal hint in canonical order.
  std::vector<Move> moves;
  legalMovesFromView(view, moves);
  for (Move m : moves)
    if (m.type == MoveType::HintColor || m.type == MoveType::HintRank) return m;
  return moves.front();
}

// ---------------------------------------------------------------------------
// HatBot

namespace {

// Recommendation heuristic over a visible hand: play the lowest playable
// slot if its index fits the code space, else discard the lowest useless
// slot, else discard the oldest. Indices 0..P-1 = play, P..2P-1 = discard.
int recommendForHand(const GameConfig& cfg, const Card* cards, const Slot* metas,
                     int handSize, const uint8_t* fireworks,
                     const uint8_t* discards, int alphabet) {
  int p = alphabet / 2;
  for (int i = 0; i < handSize && i < p; ++i)
    if (isPlayable(cfg, fireworks, cards[i])) return i;
  uint32_t useless = uselessTypes(cfg, fireworks, discards);
  for (int i = 0; i < handSize; ++i)
    if (useless & (uint32_t{1} << cfg.typeIndex(cards[i])))
      return p + std::min(i, p - 1);
  int oldest = 0;
  for (int i = 1; i < handSize; ++i)
    if (metas[i].drawTurn < metas[oldest].drawTurn) oldest = i;
  return p + std::min(oldest, p - 1);
}

int newestSlot(const AgentView& view, int player) {
  int best = 0;
  for (int i = 1; i < view.handSize(player); ++i)
    if (view.slotMeta(player, i).drawTurn >= view.slotMeta(player, best).drawTurn)
      best = i;
  return best;
}

// Hands of every player as currently visible to the viewer, replayed from
// the log (own cards are placeholders and never consulted).
struct TrackedHands {
  std::array<std::array<Card, kMaxHand>, kMaxPlayers> cards;
  std::array<std::array<Slot, kMaxHand>, kMaxPlayers> metas;
  std::array<int, kMaxPlayers> size{};
};

void applyEventToHands(TrackedHands& h, const LogEvent& e, int16_t /*viewer*/) {
  if (e.move.type == MoveType::Play || e.move.type == MoveType::Discard) {
    int a = e.actor;
    int slot = e.replacedSlot;
    if (e.drew) {
      h.cards[a][slot] = e.drawn;  // placeholder for the actor's own view
      h.metas[a][slot] = Slot{e.drawn, 0, 0, static_cast<int16_t>(e.turn + 1)};
    } else if (e.handShrank) {
      for (int i = slot; i + 1 < h.size[a]; ++i) {
        h.cards[a][i] = h.cards[a][i + 1];
        h.metas[a][i] = h.metas[a][i + 1];
      }
      --h.size[a];
    }
  }
}

}  // namespace

int HatBot::recommendFor(const AgentView& view, int player, int alphabet) {
  const GameConfig& cfg = view.config();
  Card cards[kMaxHand];
  Slot metas[kMaxHand];
  uint8_t fireworks[kMaxColors];
  uint8_t discards[kMaxTypes];
  for (int i = 0; i < view.handSize(player); ++i) {
    cards[i] = view.cardOf(player, i);
    metas[i] = view.slotMeta(player, i);
  }
  for (int c = 0; c < cfg.colors; ++c) fireworks[c] = static_cast<uint8_t>(view.fireworks(c));
  for (int t = 0; t < cfg.numTypes(); ++t) discards[t] = static_cast<uint8_t>(view.discarded(t));
  return recommendForHand(cfg, cards, metas, view.handSize(player), fireworks,
                          discards, alphabet);
}

int HatBot::encodeCode(const AgentView& view, int alphabet) {
  int sum = 0;
  for (int p = 0; p < view.players(); ++p)
    if (p != view.viewer()) sum += recommendFor(view, p, alphabet);
  return sum % alphabet;
}

Move HatBot::codeToHint(const AgentView& view, int code, int alphabet) {
  int p = alphabet / 2;
  int tOff = code % p + 1;
  bool byRank = code < p;
  int target = (view.viewer() + tOff) % view.players();
  Card c = view.cardOf(target, newestSlot(view, target));
  return byRank ? Move::hintRank(target, c.rank) : Move::hintColor(target, c.color);
}

int HatBot::hintToCode(const GameConfig& cfg, int hinter, Move hint, int alphabet) {
  int p = alphabet / 2;
  int tOff = ((hint.a - hinter) % cfg.numPlayers + cfg.numPlayers) % cfg.numPlayers;
  return (hint.type == MoveType::HintRank ? 0 : p) + tOff - 1;
}

int HatBot::currentRecommendation(const AgentView& view) {
  const GameLog* log = view.log();
  if (!log) throw StateError("hat policy requires the public log");
  const GameConfig& cfg = view.config();
  int h = alphabetSize(cfg.numPlayers);
  int viewer = view.viewer();

  TrackedHands hands;
  for (int p = 0; p < cfg.numPlayers; ++p) {
    hands.size[p] = log->initialHandSize;
    for (int i = 0; i < log->initialHandSize; ++i) {
      hands.cards[p][i] = log->initialHands[p][i];
      hands.metas[p][i] = Slot{hands.cards[p][i], 0, 0, 0};
    }
  }

  int rec = -1;
  bool fresh = false;
  for (const LogEvent& e : log->events) {
    bool isHint = e.move.type == MoveType::HintColor || e.move.type == MoveType::HintRank;
    if (isHint && e.actor != viewer) {
      // Decode with the hands and public piles as they were at hint time.
      int total = hintToCode(cfg, e.actor, e.move, h);
      int seen = 0;
      for (int k = 0; k < cfg.numPlayers; ++k) {
        if (k == e.actor || k == viewer) continue;
        seen += recommendForHand(cfg, hands.cards[k].data(), hands.metas[k].data(),
                                 hands.size[k], e.fireworksBefore.data(),
                                 e.discardsBefore.data(), h);
      }
      rec = decodeRecommendation(total, seen, h);
      fresh = true;
    }
    if (e.actor == viewer) fresh = false;
    applyEventToHands(hands, e, static_cast<int16_t>(viewer));
  }
  return fresh ? rec : -1;
}

Move HatBot::act(const AgentView& view) const {
  const GameConfig& cfg = view.config();
  int h = alphabetSize(cfg.numPlayers);
  int p = h / 2;
  int me = view.viewer();

  int rec = currentRecommendation(view);
  if (rec >= 0) {
    if (rec < p) {
      if (rec < view.handSize(me)) return Move::play(rec);
    } else {
      int slot = rec - p;
      if (slot < view.handSize(me) && view.hintTokens() < cfg.hintTokensMax)
        return Move::discard(slot);
    }
  }
  if (view.hintTokens() > 0)
    return codeToHint(view, encodeCode(view, h), h);
  int oldest = 0;
  for (int i = 1; i < view.handSize(me); ++i)
    if (view.slotMeta(me, i).drawTurn < view.slotMeta(me, oldest).drawTurn)
      oldest = i;
  return Move::discard(oldest);
}

// ---------------------------------------------------------------------------
// AOH keys and table policies

std::string aohKeyStart(const GameConfig& cfg,
                        const std::array<std::array<Card, kMaxHand>, kMaxPlayers>& hands,
                        int handSize, int viewer) {
  std::string key = "C";
  key += std::to_string(cfg.numPlayers) + "," + std::to_string(cfg.colors) + "," +
         std::to_string(cfg.maxRank) + ",";
  for (int r = 0; r < cfg.maxRank; ++r) key += std::to_string(cfg.rankMultiplicity[r]);
  key += "," + std::to_string(handSize) + "|v" + std::to_string(viewer);
  for (int p = 0; p < cfg.numPlayers; ++p) {
    key += "|p" + std::to_string(p) + ":";
    for (int i = 0; i < handSize; ++i)
      key += p == viewer ? "??" : toString(hands[p][i]);
  }
  return key;
}

void aohKeyAppend(std::string& key, const LogEvent& e, int viewer) {
  key += ";t" + std::to_string(e.turn) + "a" + std::to_string(e.actor) +
         toString(e.move);
  if (e.move.type == MoveType::HintColor || e.move.type == MoveType::HintRank) {
    key += "m" + std::to_string(e.hintMask);
    return;
  }
  if (e.hasRevealed) key += "r" + toString(e.revealed);
  if (e.drew)
    key += e.actor == viewer ? "d??" : "d" + toString(e.drawn);
  else if (e.handShrank)
    key += "x";
}

Move TablePolicy::act(const AgentView& view) const {
  auto it = table_.find(view.aohKey());
  if (it == table_.end())
    throw PolicyDomainError("table policy '" + name_ + "' has no entry for AOH: " +
                            view.aohKey());
  return it->second;
}

void TablePolicy::saveJsonl(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path);
  // Sorted for reproducible files.
  std::vector<const std::pair<const std::string, Move>*> rows;
  rows.reserve(table_.size());
  for (const auto& kv : table_) rows.push_back(&kv);
  std::sort(rows.begin(), rows.end(),
            [](auto* a, auto* b) { return a->first < b->first; });
  for (auto* kv : rows) {
    nlohmann::json j{{"aoh_key", kv->first}, {"move", toString(kv->second)}};
    out << j.dump() << "\n";
  }
}

TablePolicy TablePolicy::loadJsonl(const std::string& path, int players,
                                   const std::string& name) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::unordered_map<std::string, Move> table;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line);
    table[j.at("aoh_key").get<std::string>()] =
        moveFromString(j.at("move").get<std::string>());
  }
  return TablePolicy(name, std::move(table), players);
}

namespace {

void enumerateDeckOrders(const GameConfig& cfg, std::array<int, kMaxTypes>& counts,
                         std::vector<Card>& prefix, int remaining,
                         const std::function<void(const std::vector<Card>&)>& fn) {
  if (remaining == 0) {
    fn(prefix);
    return;
  }
  for (int t = 0; t < cfg.numTypes(); ++t) {
    if (counts[t] == 0) continue;
    --counts[t];
    prefix.push_back(cfg.cardFromType(t));
    enumerateDeckOrders(cfg, counts, prefix, remaining - 1, fn);
    prefix.pop_back();
    ++counts[t];
  }
}

}  // namespace

void forEachDeckOrder(const GameConfig& cfg,
                      const std::function<void(const std::vector<Card>&)>& fn) {
  std::array<int, kMaxTypes> counts{};
  for (int t = 0; t < cfg.numTypes(); ++t)
    counts[t] = cfg.rankMultiplicity[cfg.cardFromType(t).rank - 1];
  std::vector<Card> prefix;
  prefix.reserve(cfg.deckSize());
  enumerateDeckOrders(cfg, counts, prefix, cfg.deckSize(), fn);
}

TablePolicy crawlTablePolicy(const GameConfig& cfg, const BlueprintPolicy& base,
                             const std::string& name) {
  if (!base.supportsPlayers(cfg.numPlayers))
    throw ConfigError("base policy does not support this player count");
  std::unordered_map<std::string, Move> table;
  forEachDeckOrder(cfg, [&](const std::vector<Card>& order) {
    GameState s = gameFromDeck(cfg, order);
    GameLog log = GameLog::start(s);
    std::array<std::string, kMaxPlayers> keys;
    for (int p = 0; p < cfg.numPlayers; ++p)
      keys[p] = aohKeyStart(cfg, log.initialHands, log.initialHandSize, p);
    while (!s.isTerminal()) {
      int actor = s.currentPlayer;
      AgentView view(s, actor);
      view.attachLog(&log);
      view.setAohKey(keys[actor]);
      Move m = base.act(view);
      auto [it, inserted] = table.emplace(keys[actor], m);
      if (!inserted && it->second != m)
        throw Error("AOH key collision while crawling table policy");
      GameState before = s;
      MoveResult res = applyMove(s, m);
      log.record(before, res);
      for (int p = 0; p < cfg.numPlayers; ++p)
        aohKeyAppend(keys[p], log.events.back(), p);
    }
  });
  return TablePolicy(name, std::move(table), cfg.numPlayers);
}

std::unique_ptr<BlueprintPolicy> makeBlueprint(const std::string& spec, int players) {
  if (spec == "simple") return std::make_unique<SimpleBot>();
  if (spec == "hat") return std::make_unique<HatBot>();
  if (spec.rfind("table:", 0) == 0)
    return std::make_unique<TablePolicy>(
        TablePolicy::loadJsonl(spec.substr(6), players));
  throw ConfigError("unknown blueprint: " + spec);
}

}  // namespace hanabi
