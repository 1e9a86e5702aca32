use super::IntPoly;

/// Primitive GCD with positive leading coefficient, by the primitive
/// remainder sequence. Contents of the inputs are ignored.
pub fn gcd(p: &IntPoly, q: &IntPoly) -> IntPoly {
    let mut a = p.primitive_part();
    let mut b = q.primitive_part();
    if a.degree() < b.degree() {
        core::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        if b.is_constant() {
            return IntPoly::one();
        }
        let r = a.pseudo_rem(&b);
        a = b;
        b = r.primitive_part();
    }
    if a.is_constant() && !a.is_zero() {
        return IntPoly::one();
    }
    a
}

/// `p / gcd(p, p')`, made primitive.
pub fn squarefree_part(p: &IntPoly) -> IntPoly {
    assert!(!p.is_zero(), "squarefree_part of zero");
    let g = gcd(p, &p.derivative());
    if g.is_one() {
        return p.primitive_part();
    }
    p.primitive_part()
        .div_exact(&g)
        .expect("gcd divides its argument")
        .primitive_part()
}

/// Whether `gcd(p, p')` is constant, i.e. `p` has no repeated complex root.
pub fn is_squarefree(p: &IntPoly) -> bool {
    assert!(!p.is_zero(), "is_squarefree of zero");
    p.is_constant() || gcd(p, &p.derivative()).is_one()
}
