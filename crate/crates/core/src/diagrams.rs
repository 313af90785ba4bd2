//! Oriented Kauffman diagrams as combinatorial objects.
//!
//! A diagram of type `(w, w')` is a non-crossing perfect matching on the
//! boundary points of a rectangle carrying the word `w` on the top edge and
//! `w'` on the bottom edge. Orientation is encoded by the labels: a top
//! point is a string start iff labeled `x`, a bottom point is a start iff
//! labeled `x*`. Diagrams are stored reduced (no closed loops); loops only
//! appear transiently during composition, where they are counted by
//! orientation and handed to the caller.

use crate::words::{Letter, Word};
use crate::Error;

/// Which boundary edge a point lies on.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Side {
    Top,
    Bottom,
}

/// A labeled boundary point, indexed from the left.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BoundaryPoint {
    pub side: Side,
    pub index: usize,
}

impl BoundaryPoint {
    pub fn top(index: usize) -> Self {
        BoundaryPoint {
            side: Side::Top,
            index,
        }
    }

    pub fn bottom(index: usize) -> Self {
        BoundaryPoint {
            side: Side::Bottom,
            index,
        }
    }
}

/// An unordered pair of boundary points, stored with the smaller endpoint
/// first (top-before-bottom, then left-to-right).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Arc {
    a: BoundaryPoint,
    b: BoundaryPoint,
}

impl Arc {
    pub fn new(p: BoundaryPoint, q: BoundaryPoint) -> Self {
        if p <= q {
            Arc { a: p, b: q }
        } else {
            Arc { a: q, b: p }
        }
    }

    pub fn first(&self) -> BoundaryPoint {
        self.a
    }

    pub fn second(&self) -> BoundaryPoint {
        self.b
    }

    pub fn endpoints(&self) -> [BoundaryPoint; 2] {
        [self.a, self.b]
    }
}

/// Classification of the cap and cup arcs inside a diagram, following the
/// left endpoint's label. Through-strands contribute nothing.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct ArcCensus {
    /// Top-top arcs whose left endpoint is `x`.
    pub eps_x: usize,
    /// Top-top arcs whose left endpoint is `x*`.
    pub eps_xstar: usize,
    /// Bottom-bottom arcs whose left endpoint is `x*`.
    pub delta_x: usize,
    /// Bottom-bottom arcs whose left endpoint is `x`.
    pub delta_xstar: usize,
}

impl ArcCensus {
    /// `#(D)`: caps minus cups.
    pub fn sharp(&self) -> i64 {
        (self.eps_x + self.eps_xstar) as i64 - (self.delta_x + self.delta_xstar) as i64
    }

    /// `l(D)`: `eps_xstar`-count minus `delta_xstar`-count.
    pub fn ell(&self) -> i64 {
        self.eps_xstar as i64 - self.delta_xstar as i64
    }
}

/// A reduced oriented Kauffman diagram. Arcs are kept sorted so that equal
/// diagrams compare equal and enumeration order is canonical.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct OrientedDiagram {
    top: Word,
    bottom: Word,
    arcs: Vec<Arc>,
}

/// Result of gluing two diagrams: the reduced diagram plus the number of
/// closed loops of each orientation that were removed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Composition {
    pub loops_left: usize,
    pub loops_right: usize,
    pub diagram: OrientedDiagram,
}

impl OrientedDiagram {
    /// Builds a diagram and checks every invariant.
    pub fn new(top: Word, bottom: Word, arcs: Vec<Arc>) -> Result<Self, Error> {
        let d = Self::new_unchecked(top, bottom, arcs);
        if d.is_valid() {
            Ok(d)
        } else {
            Err(Error::Domain("invalid oriented diagram".into()))
        }
    }

    /// Builds a diagram without validity checks (arcs are still sorted).
    /// Callers must either know the data is valid or test `is_valid`.
    pub fn new_unchecked(top: Word, bottom: Word, mut arcs: Vec<Arc>) -> Self {
        arcs.sort();
        OrientedDiagram { top, bottom, arcs }
    }

    pub fn identity(w: &Word) -> Self {
        let arcs = (0..w.len())
            .map(|i| Arc::new(BoundaryPoint::top(i), BoundaryPoint::bottom(i)))
            .collect();
        OrientedDiagram {
            top: w.clone(),
            bottom: w.clone(),
            arcs,
        }
    }

    pub fn top(&self) -> &Word {
        &self.top
    }

    pub fn bottom(&self) -> &Word {
        &self.bottom
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn label(&self, p: BoundaryPoint) -> Letter {
        match p.side {
            Side::Top => self.top.letters()[p.index],
            Side::Bottom => self.bottom.letters()[p.index],
        }
    }

    /// Whether a boundary point is the start of its string.
    pub fn is_start(&self, p: BoundaryPoint) -> bool {
        match (p.side, self.label(p)) {
            (Side::Top, Letter::X) | (Side::Bottom, Letter::Xstar) => true,
            _ => false,
        }
    }

    /// Position in the circular boundary order: top left-to-right, then
    /// bottom right-to-left.
    fn circ(&self, p: BoundaryPoint) -> usize {
        match p.side {
            Side::Top => p.index,
            Side::Bottom => self.top.len() + (self.bottom.len() - 1 - p.index),
        }
    }

    /// Checks all diagram invariants: perfect matching, planarity,
    /// orientation consistency.
    pub fn is_valid(&self) -> bool {
        let m = self.top.len();
        let n = self.bottom.len();
        if m + n != 2 * self.arcs.len() {
            return false;
        }
        let mut seen = vec![false; m + n];
        for arc in &self.arcs {
            for p in arc.endpoints() {
                let limit = match p.side {
                    Side::Top => m,
                    Side::Bottom => n,
                };
                if p.index >= limit {
                    return false;
                }
                let slot = match p.side {
                    Side::Top => p.index,
                    Side::Bottom => m + p.index,
                };
                if seen[slot] {
                    return false;
                }
                seen[slot] = true;
            }
            // exactly one start and one end
            if self.is_start(arc.first()) == self.is_start(arc.second()) {
                return false;
            }
        }
        if !seen.iter().all(|&s| s) {
            return false;
        }
        // non-crossing in the circular order
        for (i, x) in self.arcs.iter().enumerate() {
            let (a1, b1) = {
                let (u, v) = (self.circ(x.first()), self.circ(x.second()));
                (u.min(v), u.max(v))
            };
            for y in &self.arcs[i + 1..] {
                let (u, v) = (self.circ(y.first()), self.circ(y.second()));
                let (a2, b2) = (u.min(v), u.max(v));
                let inside_a = a1 < a2 && a2 < b1;
                let inside_b = a1 < b2 && b2 < b1;
                if inside_a != inside_b {
                    return false;
                }
            }
        }
        true
    }

    /// All valid diagrams of type `(w, w')` in canonical order.
    pub fn enumerate(w: &Word, w_prime: &Word) -> Vec<OrientedDiagram> {
        let mut points: Vec<BoundaryPoint> =
            (0..w.len()).map(BoundaryPoint::top).collect();
        points.extend((0..w_prime.len()).rev().map(BoundaryPoint::bottom));

        let template = OrientedDiagram {
            top: w.clone(),
            bottom: w_prime.clone(),
            arcs: Vec::new(),
        };
        let starts: Vec<bool> = points.iter().map(|&p| template.is_start(p)).collect();

        // match the first point of each segment against every partner at odd
        // offset with opposite start/end role, splitting the segment in two
        fn rec(lo: usize, hi: usize, starts: &[bool], out: &mut Vec<Vec<(usize, usize)>>) {
            if lo >= hi {
                out.push(Vec::new());
                return;
            }
            let mut acc = Vec::new();
            let mut k = lo + 1;
            while k < hi {
                if starts[lo] != starts[k] {
                    let mut inner = Vec::new();
                    rec(lo + 1, k, starts, &mut inner);
                    if !inner.is_empty() {
                        let mut outer = Vec::new();
                        rec(k + 1, hi, starts, &mut outer);
                        for inn in &inner {
                            for o in &outer {
                                let mut m = vec![(lo, k)];
                                m.extend_from_slice(inn);
                                m.extend_from_slice(o);
                                acc.push(m);
                            }
                        }
                    }
                }
                k += 2;
            }
            out.append(&mut acc);
        }

        let mut matchings = Vec::new();
        rec(0, points.len(), &starts, &mut matchings);

        let mut diagrams: Vec<OrientedDiagram> = matchings
            .into_iter()
            .map(|m| {
                let arcs = m
                    .into_iter()
                    .map(|(i, j)| Arc::new(points[i], points[j]))
                    .collect();
                OrientedDiagram::new_unchecked(w.clone(), w_prime.clone(), arcs)
            })
            .collect();
        diagrams.sort();
        diagrams
    }

    /// Glues `upper` (type `(w, w')`) above `lower` (type `(w', w'')`),
    /// traces the strands, and counts the closed loops that appear.
    ///
    /// A loop is anticlockwise (value `d_L`) iff its leftmost interface
    /// point is labeled `x`, i.e. the flow there runs downward: at the
    /// leftmost crossing the interior of the loop lies to the east, so
    /// downward flow means the interior sits on the left of the direction
    /// of travel. This is pinned by `eps_x . delta_xstar = d_L 1`.
    pub fn compose(upper: &OrientedDiagram, lower: &OrientedDiagram) -> Result<Composition, Error> {
        if upper.bottom != lower.top {
            return Err(Error::SignatureMismatch {
                expected: upper.bottom.to_string(),
                found: lower.top.to_string(),
            });
        }
        let m = upper.top.len();
        let k = upper.bottom.len();
        let n = lower.bottom.len();

        #[derive(Clone, Copy, PartialEq, Eq, Debug)]
        enum Node {
            UTop(usize),
            Iface(usize),
            LBot(usize),
        }

        let mut up_top = vec![None; m];
        let mut up_iface = vec![None; k];
        for arc in &upper.arcs {
            let [p, q] = arc.endpoints();
            let node = |pt: BoundaryPoint| match pt.side {
                Side::Top => Node::UTop(pt.index),
                Side::Bottom => Node::Iface(pt.index),
            };
            let (np, nq) = (node(p), node(q));
            let mut set = |from: Node, to: Node| match from {
                Node::UTop(i) => up_top[i] = Some(to),
                Node::Iface(i) => up_iface[i] = Some(to),
                Node::LBot(_) => unreachable!(),
            };
            set(np, nq);
            set(nq, np);
        }
        let mut lo_iface = vec![None; k];
        let mut lo_bot = vec![None; n];
        for arc in &lower.arcs {
            let [p, q] = arc.endpoints();
            let node = |pt: BoundaryPoint| match pt.side {
                Side::Top => Node::Iface(pt.index),
                Side::Bottom => Node::LBot(pt.index),
            };
            let (np, nq) = (node(p), node(q));
            let mut set = |from: Node, to: Node| match from {
                Node::Iface(i) => lo_iface[i] = Some(to),
                Node::LBot(i) => lo_bot[i] = Some(to),
                Node::UTop(_) => unreachable!(),
            };
            set(np, nq);
            set(nq, np);
        }

        let mut iface_done = vec![false; k];
        let mut arcs = Vec::with_capacity((m + n) / 2);

        // paths from one outer boundary point to another; each interface
        // point is entered along one diagram's arc and left along the other
        let mut trace = |start: Node| -> BoundaryPoint {
            let mut cur = start;
            let mut hop_upper = matches!(start, Node::UTop(_));
            loop {
                let used = match cur {
                    Node::UTop(_) => true,
                    Node::LBot(_) => false,
                    Node::Iface(_) => hop_upper,
                };
                let next = match cur {
                    Node::UTop(i) => up_top[i].expect("matched point"),
                    Node::LBot(i) => lo_bot[i].expect("matched point"),
                    Node::Iface(i) => {
                        if used {
                            up_iface[i].expect("matched point")
                        } else {
                            lo_iface[i].expect("matched point")
                        }
                    }
                };
                match next {
                    Node::Iface(i) => {
                        iface_done[i] = true;
                        hop_upper = !used;
                        cur = next;
                    }
                    Node::UTop(i) => return BoundaryPoint::top(i),
                    Node::LBot(i) => return BoundaryPoint::bottom(i),
                }
            }
        };

        let mut seen_top = vec![false; m];
        let mut seen_bot = vec![false; n];
        for i in 0..m {
            if seen_top[i] {
                continue;
            }
            seen_top[i] = true;
            let end = trace(Node::UTop(i));
            match end.side {
                Side::Top => seen_top[end.index] = true,
                Side::Bottom => seen_bot[end.index] = true,
            }
            arcs.push(Arc::new(BoundaryPoint::top(i), end));
        }
        for j in 0..n {
            if seen_bot[j] {
                continue;
            }
            seen_bot[j] = true;
            let end = trace(Node::LBot(j));
            match end.side {
                Side::Top => unreachable!("top points already traced"),
                Side::Bottom => seen_bot[end.index] = true,
            }
            arcs.push(Arc::new(BoundaryPoint::bottom(j), end));
        }

        // remaining interface points lie on closed loops
        let mut loops_left = 0;
        let mut loops_right = 0;
        for start in 0..k {
            if iface_done[start] {
                continue;
            }
            let mut leftmost = start;
            let mut cur = start;
            let mut via_upper = true;
            loop {
                iface_done[cur] = true;
                leftmost = leftmost.min(cur);
                let next = if via_upper {
                    up_iface[cur].expect("matched point")
                } else {
                    lo_iface[cur].expect("matched point")
                };
                let Node::Iface(j) = next else {
                    unreachable!("loop left the interface")
                };
                via_upper = !via_upper;
                cur = j;
                if cur == start && via_upper {
                    break;
                }
            }
            match upper.bottom.letters()[leftmost] {
                Letter::X => loops_left += 1,
                Letter::Xstar => loops_right += 1,
            }
        }

        let diagram =
            OrientedDiagram::new_unchecked(upper.top.clone(), lower.bottom.clone(), arcs);
        debug_assert!(diagram.is_valid());
        Ok(Composition {
            loops_left,
            loops_right,
            diagram,
        })
    }

    /// Horizontal juxtaposition: concatenates boundary words and shifts the
    /// second diagram's indices.
    pub fn tensor(&self, other: &OrientedDiagram) -> OrientedDiagram {
        let dm = self.top.len();
        let dn = self.bottom.len();
        let shift = |p: BoundaryPoint| match p.side {
            Side::Top => BoundaryPoint::top(p.index + dm),
            Side::Bottom => BoundaryPoint::bottom(p.index + dn),
        };
        let mut arcs = self.arcs.clone();
        arcs.extend(
            other
                .arcs
                .iter()
                .map(|a| Arc::new(shift(a.first()), shift(a.second()))),
        );
        OrientedDiagram::new_unchecked(
            self.top.concat(&other.top),
            self.bottom.concat(&other.bottom),
            arcs,
        )
    }

    /// Reflection across the horizontal axis followed by orientation
    /// reversal. The two label changes cancel, so the boundary words simply
    /// trade places (indices kept); type `(w, w')` becomes `(w', w)`.
    pub fn reflect_reverse(&self) -> OrientedDiagram {
        let swap = |p: BoundaryPoint| match p.side {
            Side::Top => BoundaryPoint::bottom(p.index),
            Side::Bottom => BoundaryPoint::top(p.index),
        };
        let arcs = self
            .arcs
            .iter()
            .map(|a| Arc::new(swap(a.first()), swap(a.second())))
            .collect();
        OrientedDiagram::new_unchecked(self.bottom.clone(), self.top.clone(), arcs)
    }

    /// Rotation by pi: boundaries trade places with left-right order
    /// reversed and every letter flipped; type `(w, w')` becomes
    /// `(star(w'), star(w))`.
    pub fn rotate_pi(&self) -> OrientedDiagram {
        let m = self.top.len();
        let n = self.bottom.len();
        let map = |p: BoundaryPoint| match p.side {
            Side::Top => BoundaryPoint::bottom(m - 1 - p.index),
            Side::Bottom => BoundaryPoint::top(n - 1 - p.index),
        };
        let arcs = self
            .arcs
            .iter()
            .map(|a| Arc::new(map(a.first()), map(a.second())))
            .collect();
        OrientedDiagram::new_unchecked(self.bottom.star(), self.top.star(), arcs)
    }

    /// Flips every boundary label (orientation reversal in place); the
    /// matching is unchanged. Used by the orientation-swapping
    /// self-equivalences.
    pub fn flip_orientations(&self) -> OrientedDiagram {
        OrientedDiagram {
            top: self.top.flip_letters(),
            bottom: self.bottom.flip_letters(),
            arcs: self.arcs.clone(),
        }
    }

    /// Classifies caps and cups by the label of their left endpoint.
    pub fn arc_census(&self) -> ArcCensus {
        let mut census = ArcCensus::default();
        for arc in &self.arcs {
            let (p, q) = (arc.first(), arc.second());
            if p.side != q.side {
                continue;
            }
            let left = if p.index < q.index { p } else { q };
            match (p.side, self.label(left)) {
                (Side::Top, Letter::X) => census.eps_x += 1,
                (Side::Top, Letter::Xstar) => census.eps_xstar += 1,
                (Side::Bottom, Letter::X) => census.delta_xstar += 1,
                (Side::Bottom, Letter::Xstar) => census.delta_x += 1,
            }
        }
        census
    }

    /// Number of strings in the diagram.
    pub fn strand_count(&self) -> usize {
        self.arcs.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::homset_nonempty;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn eps_x() -> OrientedDiagram {
        OrientedDiagram::new(
            w("x x*"),
            Word::empty(),
            vec![Arc::new(BoundaryPoint::top(0), BoundaryPoint::top(1))],
        )
        .unwrap()
    }

    fn eps_xstar() -> OrientedDiagram {
        OrientedDiagram::new(
            w("x* x"),
            Word::empty(),
            vec![Arc::new(BoundaryPoint::top(0), BoundaryPoint::top(1))],
        )
        .unwrap()
    }

    fn delta_x() -> OrientedDiagram {
        OrientedDiagram::new(
            Word::empty(),
            w("x* x"),
            vec![Arc::new(BoundaryPoint::bottom(0), BoundaryPoint::bottom(1))],
        )
        .unwrap()
    }

    fn delta_xstar() -> OrientedDiagram {
        OrientedDiagram::new(
            Word::empty(),
            w("x x*"),
            vec![Arc::new(BoundaryPoint::bottom(0), BoundaryPoint::bottom(1))],
        )
        .unwrap()
    }

    #[test]
    fn validity_examples() {
        assert!(OrientedDiagram::identity(&w("x")).is_valid());

        // two start points cannot be joined
        let bad = OrientedDiagram::new_unchecked(
            w("x x"),
            Word::empty(),
            vec![Arc::new(BoundaryPoint::top(0), BoundaryPoint::top(1))],
        );
        assert!(!bad.is_valid());

        // interleaved arcs cross
        let crossing = OrientedDiagram::new_unchecked(
            w("x x* x x*"),
            Word::empty(),
            vec![
                Arc::new(BoundaryPoint::top(0), BoundaryPoint::top(2)),
                Arc::new(BoundaryPoint::top(1), BoundaryPoint::top(3)),
            ],
        );
        assert!(!crossing.is_valid());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(
            OrientedDiagram::enumerate(&Word::empty(), &Word::empty()).len(),
            1
        );
        assert_eq!(OrientedDiagram::enumerate(&w("x x*"), &w("x x*")).len(), 2);
        assert_eq!(OrientedDiagram::enumerate(&w("x* x"), &w("x* x")).len(), 2);
        // (x x*)^3 against the unit: Catalan(3) = 5
        let word = w("x x* x x* x x*");
        assert_eq!(OrientedDiagram::enumerate(&word, &Word::empty()).len(), 5);
        // no diagrams on an unbalanced pair
        assert!(OrientedDiagram::enumerate(&w("x x"), &Word::empty()).is_empty());
    }

    #[test]
    fn enumeration_catalan_and_balance_oracle() {
        // Catalan numbers by the standard recursion, independent of the
        // diagram machinery.
        let mut catalan = vec![1u64; 9];
        for n in 1..=8usize {
            catalan[n] = (0..n).map(|i| catalan[i] * catalan[n - 1 - i]).sum();
        }
        for n in 1..=6usize {
            let mut letters = Vec::new();
            for _ in 0..n {
                letters.push(Letter::X);
                letters.push(Letter::Xstar);
            }
            let word = Word::from_letters(letters);
            let count = OrientedDiagram::enumerate(&word, &Word::empty()).len() as u64;
            assert_eq!(count, catalan[n], "catalan mismatch at n = {n}");
        }

        // homset_nonempty agrees with enumeration for all |w| + |w'| <= 8
        for total in 0..=8usize {
            for top_len in 0..=total {
                let bot_len = total - top_len;
                for tb in 0..(1u32 << top_len) {
                    for bb in 0..(1u32 << bot_len) {
                        let top = Word::from_letters(
                            (0..top_len)
                                .map(|i| {
                                    if tb >> i & 1 == 0 {
                                        Letter::X
                                    } else {
                                        Letter::Xstar
                                    }
                                })
                                .collect(),
                        );
                        let bottom = Word::from_letters(
                            (0..bot_len)
                                .map(|i| {
                                    if bb >> i & 1 == 0 {
                                        Letter::X
                                    } else {
                                        Letter::Xstar
                                    }
                                })
                                .collect(),
                        );
                        let nonempty =
                            !OrientedDiagram::enumerate(&top, &bottom).is_empty();
                        assert_eq!(
                            homset_nonempty(&top, &bottom),
                            nonempty,
                            "disagreement at ({top}, {bottom})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn all_enumerated_diagrams_valid() {
        for (top, bottom) in [
            (w("x x* x x*"), w("x x*")),
            (w("x* x x* x"), w("x* x")),
            (w("x x x* x*"), Word::empty()),
        ] {
            let ds = OrientedDiagram::enumerate(&top, &bottom);
            assert!(!ds.is_empty());
            for d in &ds {
                assert!(d.is_valid());
            }
            // canonical order is strictly increasing
            for pair in ds.windows(2) {
                assert!(pair[0] < pair[1]);
            }
        }
    }

    #[test]
    fn loop_orientations() {
        // cup then cap: eps_x after delta_xstar gives one anticlockwise loop
        let c = OrientedDiagram::compose(&delta_xstar(), &eps_x()).unwrap();
        assert_eq!((c.loops_left, c.loops_right), (1, 0));
        assert_eq!(c.diagram, OrientedDiagram::identity(&Word::empty()));

        let c = OrientedDiagram::compose(&delta_x(), &eps_xstar()).unwrap();
        assert_eq!((c.loops_left, c.loops_right), (0, 1));
        assert_eq!(c.diagram, OrientedDiagram::identity(&Word::empty()));
    }

    #[test]
    fn zig_zag_is_identity() {
        // (1_x (x) eps_xstar) after (delta_xstar (x) 1_x) = 1_x
        let id_x = OrientedDiagram::identity(&w("x"));
        let upper = delta_xstar().tensor(&id_x);
        let lower = id_x.tensor(&eps_xstar());
        let c = OrientedDiagram::compose(&upper, &lower).unwrap();
        assert_eq!((c.loops_left, c.loops_right), (0, 0));
        assert_eq!(c.diagram, id_x);
    }

    #[test]
    fn composition_signature_mismatch() {
        let err = OrientedDiagram::compose(&eps_x(), &eps_x()).unwrap_err();
        assert!(matches!(err, Error::SignatureMismatch { .. }));
    }

    #[test]
    fn composition_associative_and_strand_conserving() {
        let words = [Word::empty(), w("x x*"), w("x* x"), w("x x* x x*")];
        for wa in &words {
            for wb in &words {
                for wc in &words {
                    for wd in &words {
                        if wa.len() + wb.len() > 4 || wc.len() + wd.len() > 4 {
                            continue;
                        }
                        let ds1 = OrientedDiagram::enumerate(wa, wb);
                        let ds2 = OrientedDiagram::enumerate(wb, wc);
                        let ds3 = OrientedDiagram::enumerate(wc, wd);
                        for d1 in &ds1 {
                            for d2 in &ds2 {
                                // each of the |wb| gluings lowers the path
                                // count by one, whether it merges two strands
                                // or closes a loop
                                let c12 = OrientedDiagram::compose(d1, d2).unwrap();
                                assert_eq!(
                                    c12.diagram.strand_count() + wb.len(),
                                    d1.strand_count() + d2.strand_count()
                                );
                                for d3 in &ds3 {
                                    let left = {
                                        let inner =
                                            OrientedDiagram::compose(d1, d2).unwrap();
                                        let outer =
                                            OrientedDiagram::compose(&inner.diagram, d3)
                                                .unwrap();
                                        (
                                            inner.loops_left + outer.loops_left,
                                            inner.loops_right + outer.loops_right,
                                            outer.diagram,
                                        )
                                    };
                                    let right = {
                                        let inner =
                                            OrientedDiagram::compose(d2, d3).unwrap();
                                        let outer =
                                            OrientedDiagram::compose(d1, &inner.diagram)
                                                .unwrap();
                                        (
                                            inner.loops_left + outer.loops_left,
                                            inner.loops_right + outer.loops_right,
                                            outer.diagram,
                                        )
                                    };
                                    assert_eq!(left, right);
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn tensor_examples() {
        let id_x = OrientedDiagram::identity(&w("x"));
        let id_xs = OrientedDiagram::identity(&w("x*"));
        assert_eq!(id_x.tensor(&id_xs), OrientedDiagram::identity(&w("x x*")));

        let both = eps_x().tensor(&eps_xstar());
        assert_eq!(both.top(), &w("x x* x* x"));
        assert_eq!(both.arcs().len(), 2);
        assert!(both.is_valid());

        let empty = OrientedDiagram::identity(&Word::empty());
        assert_eq!(eps_x().tensor(&empty), eps_x());
        assert_eq!(empty.tensor(&eps_x()), eps_x());
    }

    #[test]
    fn reflect_reverse_examples() {
        assert_eq!(eps_x().reflect_reverse(), delta_xstar());
        assert_eq!(delta_xstar().reflect_reverse(), eps_x());
        let id_x = OrientedDiagram::identity(&w("x"));
        assert_eq!(id_x.reflect_reverse(), id_x);

        // involution on everything small, census swap eps_x <-> delta_xstar
        for top in [w("x x*"), w("x x* x x*"), w("x* x")] {
            for bottom in [Word::empty(), w("x x*"), w("x* x")] {
                for d in OrientedDiagram::enumerate(&top, &bottom) {
                    let r = d.reflect_reverse();
                    assert!(r.is_valid());
                    assert_eq!(r.reflect_reverse(), d);
                    let (c, rc) = (d.arc_census(), r.arc_census());
                    assert_eq!(c.eps_x, rc.delta_xstar);
                    assert_eq!(c.eps_xstar, rc.delta_x);
                }
            }
        }
    }

    #[test]
    fn rotate_pi_examples() {
        let id_x = OrientedDiagram::identity(&w("x"));
        assert_eq!(id_x.rotate_pi(), OrientedDiagram::identity(&w("x*")));
        // rotating a cap gives the cup on the starred word
        assert_eq!(eps_x().rotate_pi().top(), &Word::empty());
        assert_eq!(eps_x().rotate_pi().bottom(), &w("x x*"));
        assert_eq!(eps_x().rotate_pi(), delta_xstar());
        // involution
        for d in OrientedDiagram::enumerate(&w("x x* x x*"), &w("x x*")) {
            assert_eq!(d.rotate_pi().rotate_pi(), d);
            assert!(d.rotate_pi().is_valid());
        }
    }

    #[test]
    fn census_examples() {
        let c = eps_x().arc_census();
        assert_eq!((c.eps_x, c.eps_xstar, c.delta_x, c.delta_xstar), (1, 0, 0, 0));
        assert_eq!((c.sharp(), c.ell()), (1, 0));

        let c = delta_xstar().arc_census();
        assert_eq!((c.eps_x, c.eps_xstar, c.delta_x, c.delta_xstar), (0, 0, 0, 1));
        assert_eq!((c.sharp(), c.ell()), (-1, -1));

        let c = OrientedDiagram::identity(&w("x x*")).arc_census();
        assert_eq!((c.sharp(), c.ell()), (0, 0));
    }
}
