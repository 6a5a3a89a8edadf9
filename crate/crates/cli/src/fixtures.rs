//! Built-in example documents. Together their checks use every registered law.

pub const EX: &str = "\
# Three atoms and two functions; {f, g} separates them, {f} does not.
set EX
  atoms = a b c

fn f
  on = EX
  values = a:0 b:0 c:1

fn g
  on = EX
  values = a:0 b:1 c:1

family F1
  kind = functions
  on = EX
  members = f

family F
  kind = functions
  on = EX
  members = f g

ineq EXn
  set = EX
  induced-by = F

fn idEX
  from = EX
  to = EX
  images = a:a b:b c:c

set PT
  atoms = pt

fn zero
  on = PT
  values = pt:0

family P
  kind = functions
  on = PT
  members = zero

# A two-point index with a two-point fiber over each atom.
set I
  atoms = i0 i1

ineq In
  set = I
  neq = cross-block

set B
  atoms = p q

ineq Bn
  set = B
  neq = cross-block

family Lam
  kind = sets
  index = In
  fibers = i0:Bn i1:Bn

fn h0
  from = EX
  to = B
  images = a:p b:p c:q

fn h1
  from = EX
  to = B
  images = a:p b:q c:q

check axioms
  law = ineq-axioms
  set = EXn
  require = Ineq1 Ineq2 Ineq4 Ineq5

check remarks
  law = f1
  set = EXn
  family = F

check grow
  law = monotonicity
  small = F1
  large = F

check ex-complsep
  law = complsep
  set = EXn
  family = F

check identity-affine
  law = affine
  map = idEX
  from = F
  to = F

check lam-family
  law = family
  family = Lam

check lam-sigma
  law = sigma-apartness
  family = Lam

check free-ex
  law = free
  set = EX
  target = F

check free-adj
  law = free-adjunction
  set = EX
  target = F

check rho-f
  law = rho
  space = F1

check rho-adj
  law = rho-adjunction
  space = F
  target = F

check rho-times-point
  law = rho-product
  left = F
  right = P

check ex-dual
  law = dual
  space = F

check homs
  law = hom-family
  set = EXn
  family = Lam

check embed-h
  law = embed
  set = EXn
  family = Lam
  h = i0:h0 i1:h1

check power
  law = r-power
  space = F

check tychonoff-fg
  law = tychonoff
  space = F

check tychonoff-f
  law = tychonoff
  space = F1
";

pub const METRIC: &str = "\
# Points 0, 1 and 3 on the line; the family is {d(z, -) : z in Z}.
settings
  max-atoms = 12
  max-enum = 10000

set Z
  atoms = z0 z1 z3

fn d0
  on = Z
  values = z0:0 z1:1 z3:3

fn d1
  on = Z
  values = z0:1 z1:0 z3:2

fn d3
  on = Z
  values = z0:3 z1:2 z3:0

family U
  kind = functions
  on = Z
  members = d0 d1 d3

ineq Zn
  set = Z
  induced-by = U

check metric-axioms
  law = ineq-axioms
  set = Zn
  require = Ineq1 Ineq2 Ineq4 Ineq5 Ineq6

check metric-remarks
  law = f1
  set = Zn
  family = U

check metric-complsep
  law = complsep
  set = Zn
  family = U

check metric-free
  law = free
  set = Z
  target = U

check metric-rho
  law = rho
  space = U

check metric-dual
  law = dual
  space = U

check metric-power
  law = r-power
  space = U
  values = 0 1 2 3

check metric-tychonoff
  law = tychonoff
  space = U
";

pub const GLOBAL2: &str = "\
# A global family over a two-point index: EX over i0, a two-point set over i1.
set I
  atoms = i0 i1

ineq In
  set = I
  neq = cross-block

fn chi0
  on = I
  values = i0:1 i1:0

fn chi1
  on = I
  values = i0:0 i1:1

family K
  kind = functions
  on = I
  members = chi0 chi1

set EX
  atoms = a b c

fn f
  on = EX
  values = a:0 b:0 c:1

fn g
  on = EX
  values = a:0 b:1 c:1

family F
  kind = functions
  on = EX
  members = f g

ineq EXn
  set = EX
  induced-by = F

set B
  atoms = p q

fn bit
  on = B
  values = p:0 q:1

family G
  kind = functions
  on = B
  members = bit

ineq Bn
  set = B
  induced-by = G

fn l01
  from = EX
  to = B
  images = a:p b:p c:q

fn l10
  from = B
  to = EX
  images = p:a q:c

family Two
  kind = global
  index = In
  index-family = K
  fibers = i0:EXn i1:Bn
  fiber-families = i0:F i1:G
  transports = i0>i1:l01 i1>i0:l10

family Loc
  kind = cs
  index = In
  index-family = K
  fibers = i0:EXn i1:Bn
  fiber-families = i0:F i1:G

check two-sets
  law = family
  family = Two

check two-sigma
  law = sigma-apartness
  family = Two

check loc-family
  law = cs-family
  family = Loc

check loc-pi
  law = pi-cs
  family = Loc

check loc-extension
  law = fcl3
  family = Loc

check two-global
  law = global-family
  family = Two

check two-sigma-global
  law = sigma-global
  family = Two

check two-dependent
  law = dep-se
  family = Two

check two-projection
  law = pr2
  family = Two
";

/// `(file name, text)` of every built-in document.
pub fn all() -> [(&'static str, &'static str); 3] {
    [
        ("ex.sep", EX),
        ("metric.sep", METRIC),
        ("global2.sep", GLOBAL2),
    ]
}
