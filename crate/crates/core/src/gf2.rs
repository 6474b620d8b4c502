//! Dense linear algebra over GF(2) with rows packed 64 columns to a `u64`.
//!
//! Everything here is exact and deterministic: the same matrix always
//! produces the same echelon form, the same pivot columns, and the same
//! kernel basis, in the same order. Row elimination is a word-wide XOR,
//! which is what makes nullity computations on five-digit matrix sizes
//! cheap enough to sit inside a test suite.

use std::fmt;

const WORD_BITS: usize = 64;

fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

/// A fixed-length bit vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Vector {
    len: usize,
    words: Vec<u64>,
}

impl Gf2Vector {
    pub fn zeros(len: usize) -> Self {
        Gf2Vector {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let collected: Vec<bool> = bits.into_iter().collect();
        let mut v = Gf2Vector::zeros(collected.len());
        for (i, b) in collected.iter().enumerate() {
            v.set(i, *b);
        }
        v
    }

    /// Parses a string of `0`/`1` characters, most significant position first.
    pub fn from_binary_str(s: &str) -> Self {
        Gf2Vector::from_bits(s.chars().map(|c| c == '1'))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range (len {})", self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range (len {})", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    pub fn xor_assign(&mut self, other: &Gf2Vector) {
        assert_eq!(self.len, other.len, "length mismatch in xor_assign");
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w ^= o;
        }
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    pub fn to_bools(&self) -> Vec<bool> {
        self.iter().collect()
    }
}

impl fmt::Display for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Vector({self})")
    }
}

/// A dense matrix over GF(2), row-major, bit-packed.
///
/// Padding bits past `cols` in the last word of each row are always zero.
#[derive(Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

/// Result of full row reduction: the reduced matrix plus its pivot columns.
///
/// Pivot columns are strictly increasing; row `i` of `matrix` has its leading
/// one in `pivots[i]`. Zero rows sit below all pivot rows.
#[derive(Clone, Debug)]
pub struct RowEchelon {
    pub matrix: Gf2Matrix,
    pub pivots: Vec<usize>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words_per_row = words_for(cols);
        Gf2Matrix {
            rows,
            cols,
            words_per_row,
            bits: vec![0; rows * words_per_row],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Gf2Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from rows written as `0`/`1` strings. All rows must
    /// have equal length. Handy for pinning small expected matrices in tests.
    pub fn from_binary_rows(rows: &[&str]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Gf2Matrix::zeros(rows.len(), cols);
        for (r, s) in rows.iter().enumerate() {
            assert_eq!(s.len(), cols, "ragged rows in from_binary_rows");
            for (c, ch) in s.chars().enumerate() {
                m.set(r, c, ch == '1');
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        (self.bits[r * self.words_per_row + c / WORD_BITS] >> (c % WORD_BITS)) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        let mask = 1u64 << (c % WORD_BITS);
        let w = r * self.words_per_row + c / WORD_BITS;
        if value {
            self.bits[w] |= mask;
        } else {
            self.bits[w] &= !mask;
        }
    }

    pub fn flip(&mut self, r: usize, c: usize) {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        self.bits[r * self.words_per_row + c / WORD_BITS] ^= 1u64 << (c % WORD_BITS);
    }

    /// XORs row `src` into row `dst`, starting at word `from_word` (earlier
    /// words are known zero in both rows during elimination).
    fn xor_row_from(&mut self, dst: usize, src: usize, from_word: usize) {
        let sb = src * self.words_per_row;
        let db = dst * self.words_per_row;
        for k in from_word..self.words_per_row {
            let v = self.bits[sb + k];
            self.bits[db + k] ^= v;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.words_per_row {
            self.bits.swap(a * self.words_per_row + k, b * self.words_per_row + k);
        }
    }

    /// Column of the leading one of row `r`, scanning from word `from_word`.
    fn leading_col_from(&self, r: usize, from_word: usize) -> Option<usize> {
        let base = r * self.words_per_row;
        for k in from_word..self.words_per_row {
            let w = self.bits[base + k];
            if w != 0 {
                return Some(k * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn row_vector(&self, r: usize) -> Gf2Vector {
        Gf2Vector {
            len: self.cols,
            words: self.bits[r * self.words_per_row..(r + 1) * self.words_per_row].to_vec(),
        }
    }

    /// Matrix-vector product over GF(2).
    pub fn mul_vector(&self, v: &Gf2Vector) -> Gf2Vector {
        assert_eq!(v.len(), self.cols, "dimension mismatch in mul_vector");
        let mut out = Gf2Vector::zeros(self.rows);
        for r in 0..self.rows {
            let base = r * self.words_per_row;
            let mut acc = 0u64;
            for k in 0..self.words_per_row {
                acc ^= self.bits[base + k] & v.words[k];
            }
            out.set(r, acc.count_ones() % 2 == 1);
        }
        out
    }

    /// Full reduced row echelon form.
    ///
    /// For each pivot column the first row (top-down) carrying a one is
    /// chosen, then that column is cleared from every other row. The output
    /// is the canonical reduced form: it does not depend on the input row
    /// order, and `pivots` lists the pivot columns in increasing order.
    pub fn row_reduce(&self) -> RowEchelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            let word = col / WORD_BITS;
            let mask = 1u64 << (col % WORD_BITS);
            let hit = (pivot_row..m.rows)
                .find(|&r| m.bits[r * m.words_per_row + word] & mask != 0);
            let Some(r) = hit else { continue };
            m.swap_rows(pivot_row, r);
            for other in 0..m.rows {
                if other != pivot_row && m.bits[other * m.words_per_row + word] & mask != 0 {
                    m.xor_row_from(other, pivot_row, word);
                }
            }
            pivots.push(col);
            pivot_row += 1;
            if pivot_row == m.rows {
                break;
            }
        }
        RowEchelon { matrix: m, pivots }
    }

    /// Rank via forward elimination only.
    ///
    /// Rows are bucketed by their current leading column, so each elimination
    /// step touches only rows that actually collide on a column. On matrices
    /// with band structure (grid adjacency, for instance) this stays close to
    /// linear in the number of stored words, which keeps 10,000-column
    /// instances interactive.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        let mut m = self.clone();
        // bucket[c] = rows whose current leading one sits in column c,
        // in ascending original row order.
        let mut bucket: Vec<Vec<usize>> = vec![Vec::new(); m.cols];
        for r in 0..m.rows {
            if let Some(c) = m.leading_col_from(r, 0) {
                bucket[c].push(r);
            }
        }
        let mut rank = 0;
        for col in 0..m.cols {
            let rows_here = std::mem::take(&mut bucket[col]);
            let mut it = rows_here.into_iter();
            let Some(pivot) = it.next() else { continue };
            rank += 1;
            let word = col / WORD_BITS;
            for r in it {
                m.xor_row_from(r, pivot, word);
                if let Some(c) = m.leading_col_from(r, word) {
                    bucket[c].push(r);
                }
            }
        }
        rank
    }

    /// Dimension of the kernel: `cols - rank`.
    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// A basis of the kernel, one vector per non-pivot column, in ascending
    /// column order. Each basis vector has a one in its own free column and
    /// zeros in all other free columns, so the list is canonical.
    pub fn null_space_basis(&self) -> Vec<Gf2Vector> {
        let RowEchelon { matrix, pivots } = self.row_reduce();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = Gf2Vector::zeros(self.cols);
            v.set(free, true);
            for (row, &p) in pivots.iter().enumerate() {
                if matrix.get(row, free) {
                    v.set(p, true);
                }
            }
            basis.push(v);
        }
        basis
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                write!(f, "{}", if self.get(r, c) { '1' } else { '0' })?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}
