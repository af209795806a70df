/** Bundled example scripts, identical to the files under corpus/. */

export interface Example {
  title: string;
  blurb: string;
  text: string;
}

export const EXAMPLES: readonly Example[] = [
  {
    title: "Excluded middle",
    blurb: "A two-step proof: split the disjunction, then close.",
    text: "Dis p[a, b] (Neg p[a, b])\n\nAlphaDis\n  p[a, b]\n  Neg p[a, b]\nBasic\n",
  },
  {
    title: "Instantiate twice",
    blurb: "Nested universals instantiated with the same constant.",
    text: "Imp (Uni (Uni (p[1, 0]))) p[a, a]\n\nAlphaImp\n  Neg (Uni (Uni p[1, 0]))\n  p[a, a]\nGammaUni[a]\n  Neg (Uni p[a, 0])\n  p[a, a]\nGammaUni\n  Neg p[a, a]\n  p[a, a]\nExt\n  p[a, a]\n  Neg p[a, a]\nBasic\n",
  },
  {
    title: "Existential monotonicity",
    blurb: "Branching proof using every rule family.",
    text: "Imp (Uni (Imp p[0] q[0])) (Imp (Exi p[0]) (Exi q[0]))\n\nAlphaImp\n  Neg (Uni (Imp p[0] q[0]))\n  Imp (Exi p[0]) (Exi q[0])\nExt\n  Imp (Exi p[0]) (Exi q[0])\n  Neg (Uni (Imp p[0] q[0]))\nAlphaImp\n  Neg (Exi p[0])\n  Exi q[0]\n  Neg (Uni (Imp p[0] q[0]))\nDeltaExi\n  Neg p[a]\n  Exi q[0]\n  Neg (Uni (Imp p[0] q[0]))\nExt\n  Neg (Uni (Imp p[0] q[0]))\n  Neg p[a]\n  Exi q[0]\nGammaUni\n  Neg (Imp p[a] q[a])\n  Neg p[a]\n  Exi q[0]\nBetaImp\n  p[a]\n  Neg p[a]\n  Exi q[0]\n+\n  Neg q[a]\n  Neg p[a]\n  Exi q[0]\nBasic\n  Neg q[a]\n  Neg p[a]\n  Exi q[0]\nExt\n  Exi q[0]\n  Neg q[a]\nGammaExi\n  q[a]\n  Neg q[a]\nBasic\n",
  },
];
