/// Dimensions of an n-by-m board of squares.
///
/// The associated graph has one vertex per square, with two squares adjacent
/// exactly when they share a row or a column. Dimensions are interchangeable:
/// every quantity computed from `BoardDims` is invariant under transposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoardDims {
    pub n: usize,
    pub m: usize,
}

impl BoardDims {
    pub fn new(n: usize, m: usize) -> Self {
        Self { n, m }
    }

    /// Number of squares (vertices), `n * m`.
    pub fn squares(&self) -> usize {
        self.n * self.m
    }

    pub fn min_side(&self) -> usize {
        self.n.min(self.m)
    }

    pub fn max_side(&self) -> usize {
        self.n.max(self.m)
    }

    /// True when either side is zero, i.e. the board has no squares.
    pub fn is_empty(&self) -> bool {
        self.n == 0 || self.m == 0
    }

    pub fn transposed(&self) -> Self {
        Self {
            n: self.m,
            m: self.n,
        }
    }
}

impl std::fmt::Display for BoardDims {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}x{}", self.n, self.m)
    }
}
