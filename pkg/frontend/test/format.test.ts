import { describe, expect, it } from "vitest";

import { fmt, fmtDelta, ratingLabel, round2 } from "../src/format";

describe("round2", () => {
  it("rounds halves away from zero in the decimal domain", () => {
    expect(round2(1.005)).toBe(1.01);
    expect(round2(2.675)).toBe(2.68);
    expect(round2(1.004)).toBe(1.0);
    expect(round2(0.125)).toBe(0.13);
  });

  it("mirrors the rule for negatives", () => {
    expect(round2(-1.005)).toBe(-1.01);
    expect(round2(-2.675)).toBe(-2.68);
  });

  it("passes non-finite values through", () => {
    expect(round2(Number.NaN)).toBeNaN();
    expect(round2(Number.POSITIVE_INFINITY)).toBe(Number.POSITIVE_INFINITY);
  });
});

describe("fmt", () => {
  it("renders exactly two decimals", () => {
    expect(fmt(91.33110643220898)).toBe("91.33");
    expect(fmt(13.898730114383307)).toBe("13.90");
    expect(fmt(2.94)).toBe("2.94");
    expect(fmt(32)).toBe("32.00");
  });
});

describe("fmtDelta", () => {
  it("signs positive deltas", () => {
    expect(fmtDelta(30.4)).toBe("+30.40");
    expect(fmtDelta(0.005)).toBe("+0.01");
  });

  it("keeps the minus sign and renders zero bare", () => {
    expect(fmtDelta(-1.5)).toBe("-1.50");
    expect(fmtDelta(0)).toBe("0.00");
  });
});

describe("ratingLabel", () => {
  it("replaces underscores with spaces", () => {
    expect(ratingLabel("very_high")).toBe("very high");
    expect(ratingLabel("nominal")).toBe("nominal");
  });
});
