//! Index instances of the relation families. Every box size on the outside of
//! an instance (inputs and output) is at most `nmax`.

use crate::checker::morph::Morph;
use crate::checker::{Family, RelationInstance, RelationSide};
use crate::tangle::TangleExpr;

fn cap(i: usize, n: usize) -> TangleExpr {
    TangleExpr::cap(i, n)
}

fn cup(i: usize, n: usize) -> TangleExpr {
    TangleExpr::cup(i, n)
}

fn pin(i: usize, j: usize, n: usize) -> TangleExpr {
    TangleExpr::pin(i, j, n)
}

fn c1(outer: TangleExpr, inner: TangleExpr) -> TangleExpr {
    TangleExpr::comp(outer, 1, inner)
}

fn c2(outer: TangleExpr, inner: TangleExpr) -> TangleExpr {
    TangleExpr::comp(outer, 2, inner)
}

/// `δ·id_n` drawn as `p_{i,0}` with a closed loop in its second input.
fn delta_id(i: usize, n: usize) -> TangleExpr {
    c2(pin(i, 0, n), c1(cap(0, 0), c1(cup(0, 0), TangleExpr::unit())))
}

use Morph::{Alpha as A, AlphaBar as Ab, Varpi as W};

fn mc(f: Morph, g: Morph) -> Morph {
    Morph::comp(f, g)
}

fn mt(f: Morph, g: Morph) -> Morph {
    Morph::tensor(f, g)
}

fn id(n: usize) -> Morph {
    Morph::id(n)
}

struct Out {
    family: Family,
    list: Vec<RelationInstance>,
}

impl Out {
    fn tangles(&mut self, params: &[(&'static str, usize)], lhs: TangleExpr, rhs: TangleExpr) {
        self.list.push(RelationInstance {
            family: self.family,
            params: params.to_vec(),
            lhs: RelationSide::Tangle(lhs),
            rhs: RelationSide::Tangle(rhs),
        });
    }

    fn morphs(&mut self, params: &[(&'static str, usize)], lhs: Morph, rhs: Morph) {
        self.list.push(RelationInstance {
            family: self.family,
            params: params.to_vec(),
            lhs: RelationSide::Morph(lhs),
            rhs: RelationSide::Morph(rhs),
        });
    }
}

pub(super) fn enumerate(family: Family, nmax: usize) -> Vec<RelationInstance> {
    let mut out = Out {
        family,
        list: Vec::new(),
    };
    let tangle = family.is_tangle_family();
    match family {
        Family::A1 | Family::C1 => {
            for j in 0..=nmax {
                if tangle {
                    out.tangles(&[("j", j)], c1(pin(0, j, 0), TangleExpr::unit()), TangleExpr::id(j));
                } else {
                    out.morphs(&[("j", j)], mc(W(0, j, 0), mt(Morph::Eta, id(j))), id(j));
                }
            }
            for n in 0..=nmax {
                for i in 0..=n {
                    let p = [("i", i), ("n", n)];
                    if tangle {
                        out.tangles(&p, c2(pin(i, 0, n), TangleExpr::unit()), TangleExpr::id(n));
                    } else {
                        out.morphs(&p, mc(W(i, 0, n), mt(id(n), Morph::Eta)), id(n));
                    }
                }
            }
        }
        Family::A2 | Family::C2 => {
            for n in 0..=nmax.saturating_sub(4) {
                if n + 4 > nmax {
                    break;
                }
                for i in 0..=n {
                    for j in i + 2..=n + 2 {
                        let p = [("i", i), ("j", j), ("n", n)];
                        if tangle {
                            out.tangles(&p, c1(cap(i, n), cap(j, n + 2)), c1(cap(j - 2, n), cap(i, n + 2)));
                        } else {
                            out.morphs(&p, mc(A(i, n), A(j, n + 2)), mc(A(j - 2, n), A(i, n + 2)));
                        }
                    }
                }
            }
        }
        Family::A3 | Family::C3 => {
            for n in 0..=nmax.saturating_sub(4) {
                if n + 4 > nmax {
                    break;
                }
                for j in 0..=n {
                    for i in 0..=j {
                        let p = [("i", i), ("j", j), ("n", n)];
                        if tangle {
                            out.tangles(&p, c1(cup(i, n + 2), cup(j, n)), c1(cup(j + 2, n + 2), cup(i, n)));
                        } else {
                            out.morphs(&p, mc(Ab(i, n + 2), Ab(j, n)), mc(Ab(j + 2, n + 2), Ab(i, n)));
                        }
                    }
                }
            }
        }
        Family::A4 | Family::C4 => {
            for n in 0..=nmax {
                for i in 0..=n {
                    for j in 0..=n {
                        let p = [("i", i), ("j", j), ("n", n)];
                        if tangle {
                            let lhs = c1(cap(i, n), cup(j, n));
                            let rhs = if i + 1 < j {
                                c1(cup(j - 2, n - 2), cap(i, n - 2))
                            } else if i == j + 1 || j == i + 1 {
                                TangleExpr::id(n)
                            } else if i == j {
                                delta_id(i, n)
                            } else {
                                c1(cup(j, n - 2), cap(i - 2, n - 2))
                            };
                            out.tangles(&p, lhs, rhs);
                        } else {
                            let lhs = mc(A(i, n), Ab(j, n));
                            let rhs = if i + 1 < j {
                                mc(Ab(j - 2, n - 2), A(i, n - 2))
                            } else if i == j + 1 || j == i + 1 {
                                id(n)
                            } else if i == j {
                                continue;
                            } else {
                                mc(Ab(j, n - 2), A(i - 2, n - 2))
                            };
                            out.morphs(&p, lhs, rhs);
                        }
                    }
                }
            }
        }
        Family::A5 | Family::C5 => {
            for n in 0..=nmax {
                for k in 0..=nmax {
                    if n + k < 2 || n + k - 2 > nmax {
                        continue;
                    }
                    for j in 0..=n {
                        for i in 0..=n + k - 2 {
                            let p = [("i", i), ("j", j), ("k", k), ("n", n)];
                            let lhs_t = c1(cap(i, n + k - 2), pin(j, k, n));
                            let lhs_m = mc(A(i, n + k - 2), W(j, k, n));
                            if i + 1 < j {
                                if tangle {
                                    out.tangles(&p, lhs_t, c1(pin(j - 2, k, n - 2), cap(i, n - 2)));
                                } else {
                                    out.morphs(&p, lhs_m, mc(W(j - 2, k, n - 2), mt(A(i, n - 2), id(k))));
                                }
                            } else if j < i + 1 && i + 1 < j + k {
                                if tangle {
                                    out.tangles(&p, lhs_t, c2(pin(j, k - 2, n), cap(i - j, k - 2)));
                                } else {
                                    out.morphs(&p, lhs_m, mc(W(j, k - 2, n), mt(id(n), A(i - j, k - 2))));
                                }
                            } else if i + 1 > j + k {
                                if tangle {
                                    out.tangles(&p, lhs_t, c1(pin(j, k, n - 2), cap(i - k, n - 2)));
                                } else {
                                    out.morphs(&p, lhs_m, mc(W(j, k, n - 2), mt(A(i - k, n - 2), id(k))));
                                }
                            }
                        }
                    }
                }
            }
        }
        Family::A6 | Family::C6 => {
            for n in 0..=nmax {
                for k in 0..=nmax {
                    if n + k + 2 > nmax {
                        continue;
                    }
                    for j in 0..=n {
                        for i in 0..=n + k {
                            let p = [("i", i), ("j", j), ("k", k), ("n", n)];
                            let lhs_t = || c1(cup(i, n + k), pin(j, k, n));
                            let lhs_m = || mc(Ab(i, n + k), W(j, k, n));
                            if i <= j {
                                if tangle {
                                    out.tangles(&p, lhs_t(), c1(pin(j + 2, k, n + 2), cup(i, n)));
                                } else {
                                    out.morphs(&p, lhs_m(), mc(W(j + 2, k, n + 2), mt(Ab(i, n), id(k))));
                                }
                            }
                            if j <= i && i <= j + k {
                                if tangle {
                                    out.tangles(&p, lhs_t(), c2(pin(j, k + 2, n), cup(i - j, k)));
                                } else {
                                    out.morphs(&p, lhs_m(), mc(W(j, k + 2, n), mt(id(n), Ab(i - j, k))));
                                }
                            }
                            if i >= j + k {
                                if tangle {
                                    out.tangles(&p, lhs_t(), c1(pin(j, k, n + 2), cup(i - k, n)));
                                } else {
                                    out.morphs(&p, lhs_m(), mc(W(j, k, n + 2), mt(Ab(i - k, n), id(k))));
                                }
                            }
                        }
                    }
                }
            }
        }
        Family::A7 | Family::C7 => {
            for total in 0..=nmax {
                for nn in 0..=total {
                    for j in 0..=total - nn {
                        for k in 0..=total - nn - j {
                            let l = total - nn - j - k;
                            for i in 0..=nn {
                                let p = [("i", i), ("j", j), ("k", k), ("l", l), ("n", nn)];
                                if tangle {
                                    out.tangles(
                                        &p,
                                        c1(pin(i + j, k, nn + j + l), pin(i, j + l, nn)),
                                        c2(pin(i, j + k + l, nn), pin(j, k, j + l)),
                                    );
                                } else {
                                    out.morphs(
                                        &p,
                                        mc(W(i + j, k, nn + j + l), mt(W(i, j + l, nn), id(k))),
                                        mc(W(i, j + k + l, nn), mt(id(nn), W(j, k, j + l))),
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
        Family::C8 => {
            for total in 0..=nmax {
                for nn in 0..=total {
                    for j in 0..=total - nn {
                        let l = total - nn - j;
                        for i in 0..=nn {
                            for k in 0..=nn - i {
                                let p = [("i", i), ("j", j), ("k", k), ("l", l), ("n", nn)];
                                let lhs = mc(W(i + j + k, l, nn + j), mt(W(i, j, nn), id(l)));
                                let rhs = Morph::chain(vec![
                                    W(i, j, nn + l),
                                    mt(W(i + k, l, nn), id(j)),
                                    mt(id(nn), Morph::Beta(j, l)),
                                ]);
                                out.morphs(&p, lhs, rhs);
                            }
                        }
                    }
                }
            }
        }
        Family::C9 => {
            for n in 0..=nmax {
                out.morphs(&[("n", n)], rotation(n), Morph::Theta(n));
            }
        }
    }
    out.list
}

/// `α_n∘⋯∘α_{2n−1}∘ϖ_{n,n}∘[(ᾱ_{n−1}∘⋯∘ᾱ_0∘η)⊗id_n]`.
pub fn rotation(n: usize) -> Morph {
    let mut cups = Morph::Eta;
    for t in 0..n {
        cups = mc(Ab(t, 2 * t), cups);
    }
    let mut out = mc(W(n, n, 2 * n), mt(cups, id(n)));
    for i in (n..2 * n).rev() {
        out = mc(A(i, 2 * i - n), out);
    }
    out
}
