/**
 * Hardcoded board coordinates per catalog graph, in a 100x70 viewBox.
 * Eleven small graphs; no layout engine.
 */

export type Layout = Record<string, { x: number; y: number }>;

export const LAYOUTS: Record<string, Layout> = {
  F1: {
    A: { x: 30, y: 15 }, B: { x: 70, y: 15 },
    C: { x: 70, y: 55 }, D: { x: 30, y: 55 },
  },
  F2: {
    A: { x: 12, y: 35 }, B: { x: 42, y: 35 },
    C: { x: 72, y: 12 }, D: { x: 72, y: 58 },
  },
  G1: {
    A: { x: 50, y: 35 },
    B: { x: 20, y: 10 }, C: { x: 80, y: 10 },
    D: { x: 20, y: 60 }, E: { x: 80, y: 60 },
  },
  G2: {
    A: { x: 40, y: 35 }, B: { x: 68, y: 15 }, E: { x: 94, y: 8 },
    C: { x: 14, y: 15 }, D: { x: 14, y: 55 },
  },
  G3: {
    A: { x: 8, y: 50 }, B: { x: 29, y: 20 }, C: { x: 50, y: 50 },
    D: { x: 71, y: 20 }, E: { x: 92, y: 50 },
  },
  G4: {
    A: { x: 30, y: 12 }, B: { x: 10, y: 56 }, C: { x: 50, y: 56 },
    D: { x: 72, y: 20 }, E: { x: 92, y: 50 },
  },
  H1: {
    A: { x: 8, y: 52 }, B: { x: 27, y: 18 }, C: { x: 46, y: 52 }, D: { x: 65, y: 18 },
    E: { x: 82, y: 52 }, F: { x: 96, y: 25 },
  },
  H2: {
    A: { x: 8, y: 20 }, B: { x: 25, y: 52 }, C: { x: 42, y: 20 },
    D: { x: 58, y: 52 }, E: { x: 75, y: 20 }, F: { x: 92, y: 52 },
  },
  H3: {
    A: { x: 30, y: 35 },
    B: { x: 8, y: 10 }, C: { x: 8, y: 60 }, D: { x: 52, y: 10 },
    E: { x: 74, y: 50 }, F: { x: 94, y: 25 },
  },
  I1: {
    A: { x: 8, y: 16 }, B: { x: 24, y: 50 }, C: { x: 40, y: 16 },
    D: { x: 56, y: 50 }, E: { x: 56, y: 14 },
    F: { x: 78, y: 50 }, G: { x: 94, y: 16 },
  },
  I2: {
    A: { x: 10, y: 12 }, B: { x: 36, y: 22 },
    C: { x: 62, y: 12 }, D: { x: 90, y: 22 },
    E: { x: 10, y: 48 }, F: { x: 36, y: 60 },
    G: { x: 62, y: 48 }, H: { x: 90, y: 60 },
  },
};
