use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph};
use crate::permgroup::{Permutation, PermutationGroup};

/// A finite group given by its multiplication table on `0..order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
    identity: usize,
}

/// Tables up to this order are checked for associativity exhaustively.
const FULL_ASSOCIATIVITY_CHECK: usize = 64;

impl GroupTable {
    /// Validates closure, identity and inverses exactly, and associativity
    /// exhaustively for small orders or on a deterministic sample otherwise.
    pub fn from_table(rows: Vec<Vec<usize>>) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::InvalidGroupTable("empty table".into()));
        }
        let mut mul = Vec::with_capacity(order * order);
        for row in &rows {
            if row.len() != order || row.iter().any(|&x| x >= order) {
                return Err(Error::InvalidGroupTable("table is not square over 0..order".into()));
            }
            mul.extend_from_slice(row);
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| mul[e * order + x] == x && mul[x * order + e] == x))
            .ok_or_else(|| Error::InvalidGroupTable("no identity".into()))?;
        let mut inv = vec![usize::MAX; order];
        for x in 0..order {
            let y = (0..order)
                .find(|&y| mul[x * order + y] == identity && mul[y * order + x] == identity)
                .ok_or_else(|| Error::InvalidGroupTable(format!("element {x} has no inverse")))?;
            inv[x] = y;
        }
        let table = Self { order, mul, inv, identity };
        let triples: Box<dyn Iterator<Item = (usize, usize, usize)>> = if order <= FULL_ASSOCIATIVITY_CHECK {
            Box::new((0..order).flat_map(move |a| (0..order).flat_map(move |b| (0..order).map(move |c| (a, b, c)))))
        } else {
            Box::new((0..4096usize).map(move |k| {
                let h = k.wrapping_mul(2_654_435_761);
                (h % order, (h / order) % order, (h / (order * order)) % order)
            }))
        };
        for (a, b, c) in triples {
            if table.mul(table.mul(a, b), c) != table.mul(a, table.mul(b, c)) {
                return Err(Error::InvalidGroupTable(format!("({a} {b}) {c} != {a} ({b} {c})")));
            }
        }
        Ok(table)
    }

    fn build(order: usize, op: impl Fn(usize, usize) -> usize) -> Self {
        let rows = (0..order).map(|a| (0..order).map(|b| op(a, b)).collect()).collect();
        Self::from_table(rows).expect("built-in tables are groups")
    }

    /// `Z_n`, element `i` is the residue `i`.
    pub fn cyclic(n: usize) -> Self {
        Self::build(n, |a, b| (a + b) % n)
    }

    /// `Z_2^k`, elements are bit masks with bit `j` the `j`-th coordinate.
    pub fn elementary_abelian_2(k: usize) -> Self {
        Self::build(1 << k, |a, b| a ^ b)
    }

    /// `A x B`, element `(a, b)` has index `a * |B| + b`.
    pub fn direct_product(a: &GroupTable, b: &GroupTable) -> Self {
        let m = b.order;
        Self::build(a.order * m, |x, y| a.mul(x / m, y / m) * m + b.mul(x % m, y % m))
    }

    /// Dihedral group of order `2n`; index `j * n + i` is `r^i s^j`.
    pub fn dihedral(n: usize) -> Self {
        Self::build(2 * n, |x, y| {
            let (a, b) = (x % n, x / n);
            let (c, d) = (y % n, y / n);
            let c = if b == 1 { (n - c) % n } else { c };
            ((b + d) % 2) * n + (a + c) % n
        })
    }

    /// The multiplication table of an enumerated permutation group; element
    /// `i` is the `i`-th element of its element list.
    pub fn from_permutation_group(group: &PermutationGroup) -> Result<Self> {
        let elements = group.elements()?;
        let mut rows = Vec::with_capacity(elements.len());
        for a in elements {
            let row = elements
                .iter()
                .map(|b| Ok(group.index_of(&a.then(b))?.expect("closed under products")))
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        Self::from_table(rows)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// The conjugacy class `{h g h^-1}`, sorted.
    pub fn conjugacy_class(&self, g: usize) -> Vec<usize> {
        let mut class: Vec<usize> = (0..self.order).map(|h| self.mul(self.mul(h, g), self.inv(h))).collect();
        class.sort_unstable();
        class.dedup();
        class
    }

    /// Right multiplication `x -> x g`, a permutation of the elements.
    pub fn right_regular(&self, g: usize) -> Permutation {
        Permutation::from_images_unchecked((0..self.order).map(|x| self.mul(x, g)).collect())
    }
}

/// A group table with a connection set `S` not containing the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleySpec {
    table: GroupTable,
    connection: Vec<usize>,
}

impl CayleySpec {
    pub fn new(table: GroupTable, connection: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut connection: Vec<usize> = connection.into_iter().collect();
        connection.sort_unstable();
        connection.dedup();
        if let Some(&x) = connection.iter().find(|&&x| x >= table.order()) {
            return Err(Error::InvalidConnectionSet(format!("{x} is not a group element")));
        }
        if connection.contains(&table.identity()) {
            return Err(Error::InvalidConnectionSet("contains the identity".into()));
        }
        Ok(Self { table, connection })
    }

    pub fn table(&self) -> &GroupTable {
        &self.table
    }

    pub fn connection(&self) -> &[usize] {
        &self.connection
    }

    pub fn is_inverse_closed(&self) -> bool {
        self.connection.iter().all(|&s| self.connection.binary_search(&self.table.inv(s)).is_ok())
    }
}

/// Arcs `(g, h)` with `g h^-1` in `S`, i.e. `h -> s h`.
pub fn cayley_digraph(spec: &CayleySpec) -> Result<Digraph> {
    let t = spec.table();
    Digraph::new(t.order(), (0..t.order()).flat_map(|h| spec.connection().iter().map(move |&s| (t.mul(s, h), h))))
}

/// The undirected Cayley graph; `S` must be inverse-closed.
pub fn cayley_graph(spec: &CayleySpec) -> Result<Graph> {
    if !spec.is_inverse_closed() {
        return Err(Error::InvalidConnectionSet("not inverse-closed".into()));
    }
    let t = spec.table();
    Graph::from_edges_dedup(
        t.order(),
        (0..t.order()).flat_map(|h| spec.connection().iter().map(move |&s| (t.mul(s, h), h))),
    )
}
