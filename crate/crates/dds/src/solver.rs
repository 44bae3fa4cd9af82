use bridge_core::{Deal, Seat, Strain, Suit};

/// Tunable solver optimizations. Every switch preserves results exactly; the
/// toggles exist so tests can assert that equivalence.
#[derive(Clone, Copy, Debug)]
pub struct SolverConfig {
    /// Cache trick-boundary conclusions keyed by hand shapes and the top
    /// cards each bound actually depended on, so one entry covers every
    /// position that differs only in cards that never mattered.
    pub use_tt: bool,
    /// Collapse touching equivalent cards to one representative per block.
    pub collapse_equivalents: bool,
    /// Cut off on the leader's guaranteed cashable top cards.
    pub quick_bounds: bool,
    /// Score a hand of sure winners immediately instead of playing it out.
    pub claim_shortcut: bool,
    /// Cached-conclusion budget across both cache generations; roughly 60
    /// bytes per entry.
    pub tt_capacity: usize,
}

impl Default for SolverConfig {
    fn default() -> SolverConfig {
        SolverConfig {
            use_tt: true,
            collapse_equivalents: true,
            quick_bounds: true,
            claim_shortcut: true,
            tt_capacity: 1 << 22,
        }
    }
}

const NO_CARD: u32 = u32::MAX;
const NO_HINT: u8 = 0xFF;

/// Multiply-xor mixer for the transposition maps. Keys are two already
/// well-spread words; the default hasher's hardening is wasted on them.
#[derive(Default)]
struct MixHasher(u64);

impl std::hash::Hasher for MixHasher {
    fn finish(&self) -> u64 {
        self.0
    }

    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 = (self.0 ^ u64::from(b)).wrapping_mul(0x100_0000_01b3);
        }
    }

    fn write_u64(&mut self, n: u64) {
        let mut x = self.0 ^ n;
        x = x.wrapping_mul(0x9E37_79B9_7F4A_7C15);
        x ^= x >> 32;
        self.0 = x;
    }
}

type ExactMap =
    std::collections::HashMap<(u64, u64), PatternEntry, std::hash::BuildHasherDefault<MixHasher>>;
type GeneralMap =
    std::collections::HashMap<(u64, u64), Bucket, std::hash::BuildHasherDefault<MixHasher>>;

/// Everything a trick-start position exposes to the cache: the exact identity
/// key, per-hand suit lengths (the general layer's key, with the leader),
/// per-suit top-down owner sequences, and the live rank bits behind them.
struct Position {
    /// Full owner sequences and leader, rank-erased; identifies the position.
    key: (u64, u64),
    /// Four bits per (seat, suit) count; exactly fills the word.
    shapes: u64,
    /// Owner sequences, two bits per live card, highest card leftmost.
    parts: [u64; 4],
    /// Live rank bits per suit, aligned to bit zero.
    fields: [u64; 4],
    counts: [u8; 4],
}

/// One cached conclusion: trick bounds for the leader's side, valid in every
/// position of the same shape whose top cards match `pat` — per suit a
/// four-bit prefix depth, then that many owners from the sequence top.
/// Cards below the prefix never influenced the bound, so they are free to
/// differ.
#[derive(Clone, Copy)]
struct PatternEntry {
    pat: [u32; 4],
    lo: u8,
    hi: u8,
    /// Cutoff card as suit and index from the suit's top, tried first on
    /// revisits; `NO_HINT` when unknown.
    best: u8,
}

impl PatternEntry {
    /// Total pinned cards; small patterns transfer to many positions.
    fn depth(&self) -> u32 {
        self.pat.iter().map(|p| p & 0xF).sum()
    }
}

/// Patterns pinning at most this many cards earn a slot in the general
/// layer, where they can decide positions never searched before.
const GENERAL_MAX_DEPTH: u32 = 8;

const EMPTY_ENTRY: PatternEntry = PatternEntry { pat: [0; 4], lo: 0, hi: u8::MAX, best: NO_HINT };

const BUCKET: usize = 6;

#[derive(Clone, Copy)]
struct Bucket {
    entries: [PatternEntry; BUCKET],
    len: u8,
    /// Round-robin overwrite position once the bucket is full.
    cursor: u8,
}

const EMPTY_BUCKET: Bucket = Bucket { entries: [EMPTY_ENTRY; BUCKET], len: 0, cursor: 0 };

/// Bounds found for the current position, with the live cards each bound's
/// matched pattern pins (`lo_rel` / `hi_rel`) and a suggested first move.
struct Lookup {
    lo: u8,
    lo_rel: u64,
    hi: u8,
    hi_rel: u64,
    hint: u32,
}

/// The `m` highest set bits of `field`.
fn top_prefix_bits(field: u64, m: u32) -> u64 {
    let mut f = field;
    for _ in 0..field.count_ones() - m {
        f &= f - 1;
    }
    f
}

/// Rank of the `n`-th highest set bit (zero-based); `n` must be in range.
fn nth_top_rank(field: u64, n: u32) -> u32 {
    let mut f = field;
    for _ in 0..n {
        f &= !(1u64 << (63 - f.leading_zeros()));
    }
    63 - f.leading_zeros()
}

/// Two-layer transposition table.
///
/// The exact layer maps full position identities to their entry, like any
/// transposition table; each entry remembers which top cards its bounds
/// actually depended on, so a hit can report that pattern upward. The general
/// layer is keyed only by hand shapes and holds small buckets of the most
/// transferable patterns (few pinned cards): those decide positions the
/// search has never visited, including ones from other deals.
///
/// Both layers are generational: entries land in a fresh map; when it fills,
/// the stale generation is dropped and the fresh one takes its place, so the
/// working set survives overflow instead of being wiped. Stale hits are
/// promoted back into the fresh generation.
struct TransTable {
    fresh: ExactMap,
    stale: ExactMap,
    fresh_entries: usize,
    generation_cap: usize,
    general_fresh: GeneralMap,
    general_stale: GeneralMap,
    general_entries: usize,
    general_cap: usize,
}

impl TransTable {
    fn new(capacity: usize) -> TransTable {
        TransTable {
            fresh: ExactMap::default(),
            stale: ExactMap::default(),
            fresh_entries: 0,
            generation_cap: (capacity / 2).max(2),
            general_fresh: GeneralMap::default(),
            general_stale: GeneralMap::default(),
            general_entries: 0,
            general_cap: (capacity / 8).max(2),
        }
    }

    /// True when the entry's per-suit owner prefixes all match `pos`; returns
    /// the live cards the prefixes pin, as suit lanes of sixteen bits.
    fn matches(e: &PatternEntry, pos: &Position) -> Option<u64> {
        let mut rel = 0u64;
        for suit in 0..4 {
            let m = e.pat[suit] & 0xF;
            if m == 0 {
                continue;
            }
            let count = u32::from(pos.counts[suit]);
            let prefix = (pos.parts[suit] >> (2 * (count - m))) as u32;
            if prefix != e.pat[suit] >> 4 {
                return None;
            }
            rel |= top_prefix_bits(pos.fields[suit], m) << (suit * 16);
        }
        Some(rel)
    }

    /// The live cards an entry's pattern pins in `pos`, assuming it matches.
    fn pattern_rel(e: &PatternEntry, pos: &Position) -> u64 {
        let mut rel = 0u64;
        for suit in 0..4 {
            let m = e.pat[suit] & 0xF;
            if m != 0 {
                rel |= top_prefix_bits(pos.fields[suit], m) << (suit * 16);
            }
        }
        rel
    }

    fn probe(&mut self, pos: &Position, leader: usize) -> Option<Lookup> {
        let mut out = Lookup { lo: 0, lo_rel: 0, hi: u8::MAX, hi_rel: 0, hint: NO_CARD };
        let mut found = false;
        if let Some(&e) = self.fresh.get(&pos.key) {
            found = true;
            Self::merge(&mut out, &e, Self::pattern_rel(&e, pos), pos);
        } else if let Some(&e) = self.stale.get(&pos.key) {
            found = true;
            Self::merge(&mut out, &e, Self::pattern_rel(&e, pos), pos);
            self.insert_exact(pos.key, e);
        }
        let general_key = (pos.shapes, leader as u64);
        if let Some(bucket) = self.general_fresh.get(&general_key) {
            for e in &bucket.entries[..bucket.len as usize] {
                if let Some(rel) = Self::matches(e, pos) {
                    found = true;
                    Self::merge(&mut out, e, rel, pos);
                }
            }
        } else {
            let mut promoted = [EMPTY_ENTRY; BUCKET];
            let mut n = 0;
            if let Some(bucket) = self.general_stale.get(&general_key) {
                for e in &bucket.entries[..bucket.len as usize] {
                    if let Some(rel) = Self::matches(e, pos) {
                        found = true;
                        Self::merge(&mut out, e, rel, pos);
                        promoted[n] = *e;
                        n += 1;
                    }
                }
            }
            for e in &promoted[..n] {
                self.insert_general(general_key, *e);
            }
        }
        found.then_some(out)
    }

    fn merge(out: &mut Lookup, e: &PatternEntry, rel: u64, pos: &Position) {
        if e.lo > out.lo {
            out.lo = e.lo;
            out.lo_rel = rel;
        }
        if e.hi < out.hi {
            out.hi = e.hi;
            out.hi_rel = rel;
        }
        if out.hint == NO_CARD && e.best != NO_HINT {
            let suit = u32::from(e.best >> 4);
            let idx = u32::from(e.best & 0xF);
            out.hint = suit * 13 + nth_top_rank(pos.fields[suit as usize], idx);
        }
    }

    /// Caches bounds that held because of the `rel` cards (suit lanes of the
    /// position's live bits). The stored prefix reaches from each suit's top
    /// down to its lowest `rel` card, pinning everything that could have
    /// outranked one.
    fn store(&mut self, pos: &Position, leader: usize, lo: u8, hi: u8, rel: u64, best_card: u32) {
        let mut pat = [0u32; 4];
        for suit in 0..4 {
            let lane = (rel >> (suit * 16)) & 0xFFFF;
            if lane == 0 {
                continue;
            }
            debug_assert_eq!(lane & !pos.fields[suit], 0, "bound depends on a dead card");
            let m = (pos.fields[suit] >> lane.trailing_zeros()).count_ones();
            let count = u32::from(pos.counts[suit]);
            let prefix = (pos.parts[suit] >> (2 * (count - m))) as u32;
            pat[suit] = (prefix << 4) | m;
        }
        let best = if best_card == NO_CARD {
            NO_HINT
        } else {
            let suit = best_card / 13;
            let above = (pos.fields[suit as usize] >> (best_card % 13 + 1)).count_ones();
            (suit << 4) as u8 | above as u8
        };
        let entry = PatternEntry { pat, lo, hi, best };
        self.insert_exact(pos.key, entry);
        if entry.depth() <= GENERAL_MAX_DEPTH {
            self.insert_general((pos.shapes, leader as u64), entry);
        }
    }

    /// Merges an entry into the exact layer. Bounds combine; the pattern
    /// widens to the union (per-suit deepest prefix), which backs both.
    fn insert_exact(&mut self, key: (u64, u64), new: PatternEntry) {
        if self.fresh_entries >= self.generation_cap && !self.fresh.contains_key(&key) {
            self.stale = std::mem::take(&mut self.fresh);
            self.fresh_entries = 0;
        }
        match self.fresh.entry(key) {
            std::collections::hash_map::Entry::Vacant(slot) => {
                slot.insert(new);
                self.fresh_entries += 1;
            }
            std::collections::hash_map::Entry::Occupied(mut slot) => {
                let e = slot.get_mut();
                e.lo = e.lo.max(new.lo);
                e.hi = e.hi.min(new.hi);
                if new.best != NO_HINT {
                    e.best = new.best;
                }
                for suit in 0..4 {
                    if new.pat[suit] & 0xF > e.pat[suit] & 0xF {
                        e.pat[suit] = new.pat[suit];
                    }
                }
            }
        }
    }

    fn insert_general(&mut self, key: (u64, u64), new: PatternEntry) {
        if self.general_entries >= self.general_cap {
            self.general_stale = std::mem::take(&mut self.general_fresh);
            self.general_entries = 0;
        }
        let bucket = self.general_fresh.entry(key).or_insert(EMPTY_BUCKET);
        for e in &mut bucket.entries[..bucket.len as usize] {
            if e.pat == new.pat {
                e.lo = e.lo.max(new.lo);
                e.hi = e.hi.min(new.hi);
                if new.best != NO_HINT {
                    e.best = new.best;
                }
                return;
            }
        }
        if (bucket.len as usize) < BUCKET {
            bucket.entries[bucket.len as usize] = new;
            bucket.len += 1;
            self.general_entries += 1;
        } else {
            bucket.entries[bucket.cursor as usize] = new;
            bucket.cursor = (bucket.cursor + 1) % BUCKET as u8;
        }
    }

    fn clear(&mut self) {
        self.fresh.clear();
        self.stale.clear();
        self.fresh_entries = 0;
        self.general_fresh.clear();
        self.general_stale.clear();
        self.general_entries = 0;
    }
}

/// Extracts the four remaining-card bitsets of a deal, indexed by seat.
pub fn deal_hands(deal: &Deal) -> [u64; 4] {
    [
        deal.hand(Seat::North).bits(),
        deal.hand(Seat::East).bits(),
        deal.hand(Seat::South).bits(),
        deal.hand(Seat::West).bits(),
    ]
}

/// One-shot solve: exact double-dummy tricks for the declaring side, with the
/// opening lead from declarer's left.
pub fn solve(deal: &Deal, strain: Strain, declarer: Seat) -> u8 {
    Solver::new(strain, SolverConfig::default()).solve_deal(deal, declarer)
}

const SUIT_MASK: u64 = 0x1FFF;

fn suit_bits(hand: u64, suit: usize) -> u64 {
    (hand >> (suit * 13)) & SUIT_MASK
}

/// Suit lane of the relevance word for a card, sixteen bits per suit.
fn card_lane(card: u32) -> u64 {
    1u64 << (card % 13 + 16 * (card / 13))
}

/// Cards played to the trick in progress: who is winning with what, plus the
/// table cards (needed so equivalence collapsing treats them as live).
#[derive(Clone, Copy)]
struct Trick {
    led_suit: usize,
    winner: usize,
    winning_card: u32,
    table: u64,
    len: u8,
}

enum TrickStep {
    Continue(Trick),
    Complete { winner: usize, winning_card: u32, table: u64 },
}

fn beats(card: u32, winning: u32, trump: Option<usize>) -> bool {
    let suit = card as usize / 13;
    let win_suit = winning as usize / 13;
    if suit == win_suit {
        card > winning
    } else {
        trump == Some(suit)
    }
}

fn advance_trick(trick: Option<Trick>, seat: usize, card: u32, trump: Option<usize>) -> TrickStep {
    let t = match trick {
        None => Trick {
            led_suit: card as usize / 13,
            winner: seat,
            winning_card: card,
            table: 1u64 << card,
            len: 1,
        },
        Some(mut t) => {
            if beats(card, t.winning_card, trump) {
                t.winner = seat;
                t.winning_card = card;
            }
            t.table |= 1u64 << card;
            t.len += 1;
            t
        }
    };
    if t.len == 4 {
        TrickStep::Complete { winner: t.winner, winning_card: t.winning_card, table: t.table }
    } else {
        TrickStep::Continue(t)
    }
}

/// Candidate moves, each packed as ordering weight above the card in the low
/// byte; smaller weights sort first. A hand never offers more than 13 cards.
struct MoveList {
    keys: [u64; 13],
    len: usize,
}

impl MoveList {
    fn new() -> MoveList {
        MoveList { keys: [0; 13], len: 0 }
    }

    fn push(&mut self, key: u64) {
        self.keys[self.len] = key;
        self.len += 1;
    }

    fn sort(&mut self) {
        self.keys[..self.len].sort_unstable();
    }

    fn card(&self, i: usize) -> u32 {
        (self.keys[i] & 0xFF) as u32
    }
}

/// Keeps the top card of every block of own cards not split by a live card.
fn collapse_blocks(own: u64, separators: u64) -> u64 {
    let mut kept = 0u64;
    let mut in_block = false;
    for rank in (0..13).rev() {
        let bit = 1u64 << rank;
        if own & bit != 0 {
            if !in_block {
                kept |= bit;
                in_block = true;
            }
        } else if separators & bit != 0 {
            in_block = false;
        }
    }
    kept
}

/// Exact double-dummy solver for one strain.
///
/// Search results are cached as bounds over the cards that proved them, keyed
/// by hand shapes, so one entry covers every position differing only in cards
/// that never mattered. The cache is rank- and deal-agnostic: one solver may
/// be reused across declarers and across deals of the same strain, and keeps
/// helping.
pub struct Solver {
    trump: Option<usize>,
    config: SolverConfig,
    tt: TransTable,
    hands: [u64; 4],
    /// Which seat was dealt each card; fixed for one `solve_ending` run.
    owners: [u8; 52],
    /// Cutoff counts per (seat, card), used to order untried moves.
    history: [[u64; 52]; 4],
    nodes: u64,
    /// Temporary tuning counters.
    pub stats: Stats,
}

#[derive(Default, Debug, Clone)]
pub struct Stats {
    pub starts_by_depth: [u64; 14],
    pub probes: u64,
    pub probe_hits: u64,
    pub probe_cuts: u64,
    pub qt_cuts: u64,
    pub ceiling_cuts: u64,
    pub claim_cuts: u64,
    pub first_move_cuts: u64,
    pub later_move_cuts: u64,
    pub fail_lows: u64,
}

impl Solver {
    pub fn new(strain: Strain, config: SolverConfig) -> Solver {
        Solver {
            trump: strain.trump().map(Suit::index),
            config,
            tt: TransTable::new(if config.use_tt { config.tt_capacity } else { 4 }),
            hands: [0; 4],
            owners: [0; 52],
            history: [[0; 52]; 4],
            nodes: 0,
            stats: Stats::default(),
        }
    }

    /// Search nodes visited since construction (diagnostic).
    pub fn node_count(&self) -> u64 {
        self.nodes
    }

    /// Double-dummy tricks for the declaring side on a full deal.
    pub fn solve_deal(&mut self, deal: &Deal, declarer: Seat) -> u8 {
        self.solve_deal_from(deal, declarer, None)
    }

    /// Like `solve_deal`, seeded with a guess at the answer (a related
    /// result, say the other declarer of the same side). The guess only
    /// steers which trick targets get probed first; the result is exact.
    pub fn solve_deal_from(&mut self, deal: &Deal, declarer: Seat, guess: Option<u8>) -> u8 {
        13 - self.solve_ending_from(deal_hands(deal), declarer.next(), guess.map(|g| 13 - g.min(13)))
    }

    /// Exact tricks for the leader's side from a position where every seat
    /// holds the same number of cards and `leader` is on lead.
    pub fn solve_ending(&mut self, hands: [u64; 4], leader: Seat) -> u8 {
        self.solve_ending_from(hands, leader, None)
    }

    /// `solve_ending`, optionally seeded with a guess for the answer.
    pub fn solve_ending_from(&mut self, hands: [u64; 4], leader: Seat, guess: Option<u8>) -> u8 {
        let n = hands[0].count_ones() as u8;
        debug_assert!(hands.iter().all(|h| h.count_ones() as u8 == n));
        self.hands = hands;
        self.history = [[0; 52]; 4];
        for (seat, hand) in hands.iter().enumerate() {
            let mut m = *hand;
            while m != 0 {
                let card = m.trailing_zeros();
                self.owners[card as usize] = seat as u8;
                m &= m - 1;
            }
        }
        let leader = leader.index();
        // Zero-window probes walking the trick target to the exact value,
        // starting from whatever the static bounds already settle. Each
        // fail-soft probe result jumps a bound and becomes the next probe
        // point, so a correct guess closes the window in two probes.
        let mut at_least = 0u8;
        let mut at_most = n;
        if self.config.quick_bounds && n > 0 {
            at_least = self.quick_tricks(leader).0;
            at_most = n - self.forced_losses(leader).0;
        }
        let mut guess = guess.unwrap_or((at_least + at_most + 1) / 2);
        while at_least < at_most {
            let estimate = guess.clamp(at_least + 1, at_most);
            let score = self.search(leader, None, estimate).0;
            if score >= estimate {
                at_least = score;
                guess = score + 1;
            } else {
                at_most = score;
                guess = score;
            }
        }
        at_least
    }

    /// Drops all cached positions.
    pub fn clear_cache(&mut self) {
        self.tt.clear();
    }

    /// Fail-soft zero-window probe. Returns `s`, a bound on the future tricks
    /// (the trick in progress included) winnable by the side of `to_play`:
    /// `s >= target` means at least `s` are winnable, `s < target` means at
    /// most `s` are. The second word reports which live cards the bound
    /// depended on, as sixteen-bit suit lanes: the proof held because of
    /// their ranks and owners, while every card outside it could be swapped
    /// for any other below its suit's reported cards without changing the
    /// conclusion. Shape-only facts (trick counts, follow obligations) are
    /// never reported; the cache key carries them.
    fn search(&mut self, to_play: usize, trick: Option<Trick>, target: u8) -> (u8, u64) {
        self.nodes += 1;
        let remaining = self.hands[to_play].count_ones() as u8;
        if target > remaining {
            return (remaining, 0);
        }
        if target == 0 {
            return (0, 0);
        }

        let at_trick_start = trick.is_none();
        let mut pos = None;
        let mut hint = NO_CARD;
        if at_trick_start {
            if remaining == 1 {
                return self.last_trick(to_play);
            }
            self.stats.starts_by_depth[remaining as usize] += 1;
            if self.config.use_tt {
                let p = self.position(to_play);
                self.stats.probes += 1;
                if let Some(cached) = self.tt.probe(&p, to_play) {
                    self.stats.probe_hits += 1;
                    if cached.lo >= target {
                        self.stats.probe_cuts += 1;
                        return (cached.lo, cached.lo_rel);
                    }
                    if cached.hi < target {
                        self.stats.probe_cuts += 1;
                        return (cached.hi, cached.hi_rel);
                    }
                    hint = cached.hint;
                }
                pos = Some(p);
            }
            if self.config.quick_bounds {
                let (qt, qt_rel) = self.quick_tricks(to_play);
                if qt >= target {
                    self.stats.qt_cuts += 1;
                    if let Some(p) = &pos {
                        self.tt.store(p, to_play, qt, u8::MAX, qt_rel, NO_CARD);
                    }
                    return (qt, qt_rel);
                }
                let (losses, loss_rel) = self.forced_losses(to_play);
                let ceiling = remaining - losses;
                if ceiling < target {
                    self.stats.ceiling_cuts += 1;
                    if let Some(p) = &pos {
                        self.tt.store(p, to_play, 0, ceiling, loss_rel, NO_CARD);
                    }
                    return (ceiling, loss_rel);
                }
            }
            if self.config.claim_shortcut {
                if let Some(claim_rel) = self.leader_claims_rest(to_play) {
                    self.stats.claim_cuts += 1;
                    if let Some(p) = &pos {
                        self.tt.store(p, to_play, remaining, u8::MAX, claim_rel, NO_CARD);
                    }
                    return (remaining, claim_rel);
                }
            }
        }

        let mut moves = self.ordered_moves(to_play, trick, hint);
        moves.sort();
        let my_side = to_play & 1;
        let mut best = 0u8;
        let mut best_card = NO_CARD;
        let mut all_rel = 0u64;
        for i in 0..moves.len {
            let card = moves.card(i);
            let bit = 1u64 << card;
            self.hands[to_play] &= !bit;
            let (score, move_rel) = match advance_trick(trick, to_play, card, self.trump) {
                TrickStep::Continue(t) => {
                    let next = (to_play + 1) & 3;
                    if next & 1 == my_side {
                        self.search(next, Some(t), target)
                    } else {
                        let (s, rel) = self.search(next, Some(t), remaining + 1 - target);
                        (remaining - s, rel)
                    }
                }
                TrickStep::Complete { winner, winning_card, table } => {
                    // The win was safe because nothing above the winning card
                    // was available: pin it and every live card over it.
                    let suit = winning_card as usize / 13;
                    let all =
                        self.hands[0] | self.hands[1] | self.hands[2] | self.hands[3] | table;
                    let over = suit_bits(all, suit) & !((1u64 << (winning_card % 13)) - 1);
                    let closure = over << (suit * 16);
                    let (s, rel) = if winner & 1 == my_side {
                        let (s, rel) = self.search(winner, None, target - 1);
                        (1 + s, rel)
                    } else {
                        let (s, rel) = self.search(winner, None, remaining - target);
                        ((remaining - 1) - s, rel)
                    };
                    (s, rel | closure)
                }
            };
            self.hands[to_play] |= bit;
            if score >= target {
                self.history[to_play][card as usize] += u64::from(remaining) * u64::from(remaining);
                if at_trick_start {
                    if i == 0 {
                        self.stats.first_move_cuts += 1;
                    } else {
                        self.stats.later_move_cuts += 1;
                    }
                    if let Some(p) = &pos {
                        self.tt.store(p, to_play, score, u8::MAX, move_rel, card);
                    }
                }
                // One sufficient move proves the lower bound; the refuted
                // moves before it prove nothing and would only blur the
                // pattern.
                return (score, move_rel);
            }
            all_rel |= move_rel;
            if score > best || best_card == NO_CARD {
                best = score;
                best_card = card;
            }
        }
        if at_trick_start {
            self.stats.fail_lows += 1;
            if let Some(p) = &pos {
                // The strongest refuted move is still the best first try when
                // a later, lower-target probe revisits this position.
                self.tt.store(p, to_play, 0, best, all_rel, best_card);
            }
        }
        (best, all_rel)
    }

    /// Everyone is down to one card: play it out directly.
    fn last_trick(&self, leader: usize) -> (u8, u64) {
        let mut winner = leader;
        let mut winning = self.hands[leader].trailing_zeros();
        let mut rel = card_lane(winning);
        for i in 1..4 {
            let seat = (leader + i) & 3;
            let card = self.hands[seat].trailing_zeros();
            rel |= card_lane(card);
            if beats(card, winning, self.trump) {
                winner = seat;
                winning = card;
            }
        }
        (u8::from(winner & 1 == leader & 1), rel)
    }

    /// Tricks the leader's side can bank unconditionally by cashing from the
    /// top — only the trump suit while the opponents still hold a trump.
    /// A hand's sure cashes are its cards higher than every other live card
    /// of their suit, partner's included: leading them from the top, nobody
    /// (partner forced to follow included) can overtake, so each wins and
    /// keeps the lead. Partner's cashes count instead when the lead can be
    /// handed over, i.e. some suit we hold is headed by partner's master.
    /// A lower bound, never an estimate; the second word reports the cards
    /// the count rests on.
    fn quick_tricks(&self, leader: usize) -> (u8, u64) {
        if let Some(t) = self.trump {
            let opp_trumps = suit_bits(
                self.hands[(leader + 1) & 3] | self.hands[(leader + 3) & 3],
                t,
            );
            if opp_trumps != 0 {
                return self.trump_block(leader);
            }
        }
        fn above_mask(mine: u64, others: u64) -> u64 {
            if others == 0 {
                mine
            } else {
                let shift = 64 - others.leading_zeros();
                (mine >> shift) << shift
            }
        }
        let my = self.hands[leader];
        let partner = self.hands[(leader + 2) & 3];
        let opps = self.hands[(leader + 1) & 3] | self.hands[(leader + 3) & 3];
        let mut my_cash = 0;
        let mut my_rel = 0u64;
        let mut partner_cash = 0;
        let mut partner_rel = 0u64;
        let mut transfer = false;
        for suit in 0..4 {
            let mine = suit_bits(my, suit);
            let ours = suit_bits(partner, suit);
            let theirs = suit_bits(opps, suit);
            let mine_top = above_mask(mine, ours | theirs);
            let ours_top = above_mask(ours, mine | theirs);
            my_cash += mine_top.count_ones();
            my_rel |= mine_top << (suit * 16);
            partner_cash += ours_top.count_ones();
            partner_rel |= ours_top << (suit * 16);
            if mine != 0 && ours != 0 && ours.leading_zeros() < (mine | theirs).leading_zeros() {
                transfer = true;
            }
        }
        let (quick, rel) = if transfer && partner_cash > my_cash {
            (partner_cash, partner_rel)
        } else {
            (my_cash, my_rel)
        };
        let (block, block_rel) = self.trump_block(leader);
        if u32::from(block) >= quick {
            (block, block_rel)
        } else {
            (quick as u8, rel)
        }
    }

    /// Tricks `seat`'s side banks in the trump suit no matter who leads.
    /// Take the run of live trumps from the top for as long as they belong
    /// to that side: nothing outranks a card of the run, so each one wins
    /// whatever trick it is eventually played to, and since a hand plays one
    /// card per trick the larger per-hand share falls on distinct tricks.
    fn trump_block(&self, seat: usize) -> (u8, u64) {
        let Some(t) = self.trump else { return (0, 0) };
        let mine = suit_bits(self.hands[seat], t);
        let partner = suit_bits(self.hands[(seat + 2) & 3], t);
        let theirs = suit_bits(self.hands[(seat + 1) & 3] | self.hands[(seat + 3) & 3], t);
        let shift = if theirs == 0 { 0 } else { 64 - theirs.leading_zeros() };
        let count = (mine >> shift).count_ones().max((partner >> shift).count_ones());
        let block = ((mine | partner) >> shift) << shift;
        (count as u8, block << (t * 16))
    }

    /// Tricks the opponents of `to_play` are certain to take from here: their
    /// guaranteed trump block. An upper-bound counterpart to `quick_tricks`.
    fn forced_losses(&self, to_play: usize) -> (u8, u64) {
        self.trump_block((to_play + 1) & 3)
    }

    /// Reads the current hands into cache coordinates; see `Position`.
    fn position(&self, leader: usize) -> Position {
        let all = self.hands[0] | self.hands[1] | self.hands[2] | self.hands[3];
        let mut parts = [0u64; 4];
        let mut fields = [0u64; 4];
        let mut counts = [0u8; 4];
        let mut keyed = [0u64; 4];
        for suit in 0..4 {
            let field = suit_bits(all, suit);
            fields[suit] = field;
            counts[suit] = field.count_ones() as u8;
            let mut m = field;
            let mut packed = 0u64;
            while m != 0 {
                let top = 63 - m.leading_zeros();
                packed = (packed << 2) | u64::from(self.owners[suit * 13 + top as usize]);
                m &= !(1u64 << top);
            }
            parts[suit] = packed;
            keyed[suit] = (packed << 4) | u64::from(counts[suit]);
        }
        let mut shapes = 0u64;
        for seat in 0..4 {
            for suit in 0..4 {
                shapes = (shapes << 4) | u64::from(suit_bits(self.hands[seat], suit).count_ones());
            }
        }
        let key = (
            (keyed[0] << 30) | keyed[1] | ((leader as u64) << 62),
            (keyed[2] << 30) | keyed[3],
        );
        Position { key, shapes, parts, fields, counts }
    }

    /// When the leader's cards win every remaining trick by force — each
    /// strictly higher than every other live card of its suit, and either the
    /// opponents are out of trumps or the leader holds nothing but master
    /// trumps — returns the cards the claim rests on; `None` otherwise.
    fn leader_claims_rest(&self, leader: usize) -> Option<u64> {
        let my = self.hands[leader];
        let others =
            self.hands[(leader + 1) & 3] | self.hands[(leader + 2) & 3] | self.hands[(leader + 3) & 3];
        if let Some(t) = self.trump {
            let opp_trumps = suit_bits(
                self.hands[(leader + 1) & 3] | self.hands[(leader + 3) & 3],
                t,
            );
            if opp_trumps != 0 {
                if my & !(SUIT_MASK << (t * 13)) != 0 {
                    return None;
                }
                let my_t = suit_bits(my, t);
                let other_t = suit_bits(others, t);
                if my_t.trailing_zeros() > 63 - other_t.leading_zeros() {
                    return Some(my_t << (t * 16));
                }
                return None;
            }
        }
        let mut rel = 0u64;
        for suit in 0..4 {
            let my_s = suit_bits(my, suit);
            if my_s == 0 {
                continue;
            }
            let other_s = suit_bits(others, suit);
            if other_s != 0 && my_s.trailing_zeros() < 64 - other_s.leading_zeros() {
                return None;
            }
            rel |= my_s << (suit * 16);
        }
        Some(rel)
    }

    /// Legal cards for `to_play`, equivalence-collapsed, each packed with its
    /// try-order weight. Weight fields, high to low: move class, static
    /// preference within the class, inverted cutoff history, the card itself.
    /// Leads class masters first (highest first: they keep the lead), then
    /// low cards toward a partner who out-tops the opponents, then cheap
    /// exits; in-trick plays class winning cards before discards, cheapest
    /// first. A remembered cutoff card outranks everything.
    fn ordered_moves(&self, to_play: usize, trick: Option<Trick>, hint: u32) -> MoveList {
        const HIST_CLAMP: u64 = (1 << 26) - 1;
        let hand = self.hands[to_play];
        let mut moves = MoveList::new();
        let mut others = 0u64;
        for seat in 0..4 {
            if seat != to_play {
                others |= self.hands[seat];
            }
        }
        let history = &self.history[to_play];
        let pack = |card: u32, class: u64, pref: u64| {
            if card == hint {
                return u64::from(card);
            }
            let hist = HIST_CLAMP - history[card as usize].min(HIST_CLAMP);
            (1 << 44) | (class << 42) | (pref << 38) | (hist << 8) | u64::from(card)
        };
        // Live separators for collapsing: the suit's cards in the other
        // hands or already on the table this trick; cards gone in earlier
        // tricks are dead and do not split a block.
        let separators = others | trick.map_or(0, |t| t.table);
        let kept = |suit: usize, mask: u64| {
            if self.config.collapse_equivalents {
                collapse_blocks(mask, suit_bits(separators, suit))
            } else {
                mask
            }
        };
        match trick {
            Some(t) => {
                let partner_winning = t.len >= 2 && t.winner == (to_play + 2) & 3;
                let emit = |moves: &mut MoveList, suit: usize, mask: u64| {
                    let mut m = kept(suit, mask);
                    while m != 0 {
                        let rank = 63 - m.leading_zeros();
                        let card = suit as u32 * 13 + rank;
                        let class = u64::from(
                            partner_winning || !beats(card, t.winning_card, self.trump),
                        );
                        moves.push(pack(card, class, u64::from(rank)));
                        m &= !(1u64 << rank);
                    }
                };
                let follow_mask = suit_bits(hand, t.led_suit);
                if follow_mask != 0 {
                    emit(&mut moves, t.led_suit, follow_mask);
                } else {
                    for suit in 0..4 {
                        let mask = suit_bits(hand, suit);
                        if mask != 0 {
                            emit(&mut moves, suit, mask);
                        }
                    }
                }
            }
            None => {
                let partner = self.hands[(to_play + 2) & 3];
                let opps = self.hands[(to_play + 1) & 3] | self.hands[(to_play + 3) & 3];
                for suit in 0..4 {
                    let mask = suit_bits(hand, suit);
                    if mask == 0 {
                        continue;
                    }
                    let partner_suit = suit_bits(partner, suit);
                    let opp_suit = suit_bits(opps, suit);
                    let other = partner_suit | opp_suit;
                    let other_top =
                        if other == 0 { -1 } else { 63 - other.leading_zeros() as i32 };
                    let support_class =
                        if partner_suit.leading_zeros() < opp_suit.leading_zeros() { 1 } else { 2 };
                    let mut m = kept(suit, mask);
                    while m != 0 {
                        let rank = 63 - m.leading_zeros();
                        let card = suit as u32 * 13 + rank;
                        let (class, pref) = if rank as i32 > other_top {
                            (0, u64::from(13 - rank))
                        } else {
                            (support_class, u64::from(rank))
                        };
                        moves.push(pack(card, class, pref));
                        m &= !(1u64 << rank);
                    }
                }
            }
        }
        moves
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn collapse_keeps_block_tops() {
        // Own KQJ with no live separators collapses to K.
        let own = 0b0111_0000_0000_0; // K,Q,J at bits 11,10,9
        assert_eq!(collapse_blocks(own, 0), 1 << 11);
        // A live ten splits nothing above it; a live queen splits K from J.
        let sep_q = 1 << 10;
        let own_kj = (1 << 11) | (1 << 9);
        assert_eq!(collapse_blocks(own_kj, sep_q), own_kj);
        // Dead queen (not a separator): K and J merge.
        assert_eq!(collapse_blocks(own_kj, 0), 1 << 11);
    }

    #[test]
    fn beats_respects_trump_and_led_suit() {
        let c = |suit: u32, rank: u32| suit * 13 + rank - 2;
        // Spade ace beats spade king.
        assert!(beats(c(3, 14), c(3, 13), None));
        // Off-suit card never beats without trumps.
        assert!(!beats(c(2, 14), c(3, 2), None));
        // Small trump beats any off-suit card.
        assert!(beats(c(0, 2), c(3, 14), Some(0)));
        // Higher trump beats lower trump.
        assert!(beats(c(0, 5), c(0, 3), Some(0)));
        assert!(!beats(c(0, 3), c(0, 5), Some(0)));
    }

    #[test]
    fn prefix_helpers_pick_top_bits() {
        let field = 0b1011010u64;
        assert_eq!(top_prefix_bits(field, 0), 0);
        assert_eq!(top_prefix_bits(field, 2), 0b1010000);
        assert_eq!(top_prefix_bits(field, 4), 0b1011010);
        assert_eq!(nth_top_rank(field, 0), 6);
        assert_eq!(nth_top_rank(field, 1), 4);
        assert_eq!(nth_top_rank(field, 3), 1);
    }
}
