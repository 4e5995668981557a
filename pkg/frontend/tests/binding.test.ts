import { execFileSync } from "node:child_process";
import * as fs from "node:fs";
import * as path from "node:path";
import { fileURLToPath } from "node:url";
import { beforeAll, afterAll, describe, expect, it } from "vitest";

import { BoundEnv, EnvClosedError, EnvError, makeEnv } from "../src/index.js";

const HERE = path.dirname(fileURLToPath(import.meta.url));
const GOLDENS = path.join(HERE, "goldens");
const SEEDS = [101, 202, 303];
const N_ENVS = 4;
const STEPS = 100;

interface Golden {
  seed: number;
  n_envs: number;
  h: number;
  w: number;
  steps: number;
  actions: number[][];
  rewards: number[][];
  terminated: number[][];
  truncated: number[][];
  distance: number[][];
  progress: number[][];
  success: number[][];
  x: number[][];
  t: number[][];
}

function loadGolden(seed: number): { doc: Golden; frames: Buffer; frameBytes: number } {
  const doc = JSON.parse(
    fs.readFileSync(path.join(GOLDENS, `golden-${seed}.json`), "utf-8"),
  ) as Golden;
  const raw = fs.readFileSync(path.join(GOLDENS, `golden-${seed}-frames.raw`));
  const h = raw.readUInt32LE(0);
  const w = raw.readUInt32LE(4);
  const count = raw.readUInt32LE(8);
  expect(h).toBe(doc.h);
  expect(w).toBe(doc.w);
  expect(count).toBe((doc.steps + 1) * doc.n_envs);
  return { doc, frames: raw.subarray(12), frameBytes: h * w * 3 };
}

function goldenBatch(g: ReturnType<typeof loadGolden>, batchIndex: number): Buffer {
  const size = g.frameBytes * N_ENVS;
  return g.frames.subarray(batchIndex * size, (batchIndex + 1) * size);
}

beforeAll(() => {
  execFileSync("python3", [path.join(HERE, "make_goldens.py")], {
    stdio: "inherit",
    timeout: 300_000,
  });
}, 320_000);

describe("binding equivalence against native goldens", () => {
  for (const seed of SEEDS) {
    it(
      `seed ${seed}: frames, rewards, and info vectors are bit-identical`,
      async () => {
        const g = loadGolden(seed);
        const env = await makeEnv({ nEnvs: N_ENVS, seed });
        try {
          const reset = await env.reset();
          expect(reset.shape).toEqual([N_ENVS, 128, 128, 3]);
          expect(Buffer.from(reset.obs).equals(goldenBatch(g, 0))).toBe(true);

          for (let t = 0; t < STEPS; t++) {
            const out = await env.step(g.doc.actions[t]);
            expect(Buffer.from(out.obs).equals(goldenBatch(g, t + 1))).toBe(true);
            expect(Array.from(out.rewards)).toEqual(g.doc.rewards[t]);
            expect(Array.from(out.terminated)).toEqual(g.doc.terminated[t]);
            expect(Array.from(out.truncated)).toEqual(g.doc.truncated[t]);
            expect(Array.from(out.info.distance)).toEqual(g.doc.distance[t]);
            expect(Array.from(out.info.progress)).toEqual(g.doc.progress[t]);
            expect(Array.from(out.info.success)).toEqual(g.doc.success[t]);
            expect(Array.from(out.info.x)).toEqual(g.doc.x[t]);
            expect(Array.from(out.info.t)).toEqual(g.doc.t[t]);
          }
        } finally {
          await env.close();
        }
      },
      120_000,
    );
  }
});

describe("contract", () => {
  let env: BoundEnv;

  beforeAll(async () => {
    env = await makeEnv({ nEnvs: N_ENVS, seed: 9 });
  }, 60_000);

  afterAll(async () => {
    await env.close();
  });

  it("exposes batch geometry", () => {
    expect(env.nEnvs).toBe(N_ENVS);
    expect(env.h).toBe(128);
    expect(env.w).toBe(128);
  });

  it("observation shape and dtype contract", async () => {
    const r = await env.reset();
    expect(r.shape).toEqual([N_ENVS, 128, 128, 3]);
    expect(r.obs).toBeInstanceOf(Uint8Array);
    expect(r.obs.length).toBe(N_ENVS * 128 * 128 * 3);
  });

  it("idle first step pays exactly the idle and time penalties", async () => {
    await env.reset();
    const out = await env.step([0, 0, 0, 0]);
    expect(Array.from(out.rewards)).toEqual([-5.1, -5.1, -5.1, -5.1]);
  });

  it("terminated is always false", async () => {
    await env.reset();
    for (let t = 0; t < 5; t++) {
      const out = await env.step([2, 2, 2, 2]);
      expect(Array.from(out.terminated)).toEqual([0, 0, 0, 0]);
    }
  });

  it("rejects actions outside the bitmask range", async () => {
    await env.reset();
    await expect(env.step([0, 8, 0, 0])).rejects.toThrow(EnvError);
    await expect(env.step([0, -1, 0, 0])).rejects.toThrow(EnvError);
    await expect(env.step([0, 0, 0])).rejects.toThrow(/need 4 actions/);
  });

  it("rejects a bad env size", async () => {
    await expect(makeEnv({ nEnvs: 0, seed: 1 })).rejects.toThrow(EnvError);
  });
});

describe("lifecycle", () => {
  it("operations on a closed handle fail cleanly", async () => {
    const env = await makeEnv({ nEnvs: 1, seed: 3 });
    await env.reset();
    await env.close();
    await expect(env.reset()).rejects.toThrow(EnvClosedError);
    await expect(env.step([0])).rejects.toThrow(EnvClosedError);
    await env.close(); // idempotent
  }, 60_000);

  it("loads a config file and surfaces validation errors", async () => {
    const good = path.join(HERE, "tmp-good.yaml");
    fs.writeFileSync(good, "layout:\n  p_change: 0.0\n");
    const env = await makeEnv({ nEnvs: 2, seed: 5, configPath: good });
    expect(env.h).toBe(128);
    await env.close();
    fs.rmSync(good);

    const bad = path.join(HERE, "tmp-bad.yaml");
    fs.writeFileSync(bad, "filters:\n  pixelate_factor: 0\n");
    await expect(makeEnv({ nEnvs: 1, seed: 5, configPath: bad })).rejects.toThrow(
      /pixelate_factor/,
    );
    fs.rmSync(bad);

    await expect(
      makeEnv({ nEnvs: 1, seed: 5, configPath: "/no/such/config.yaml" }),
    ).rejects.toThrow(/config.yaml/);
  }, 60_000);

  it("same construction twice yields identical trajectories", async () => {
    const a = await makeEnv({ nEnvs: 2, seed: 77 });
    const b = await makeEnv({ nEnvs: 2, seed: 77 });
    try {
      const ra = await a.reset();
      const rb = await b.reset();
      expect(Buffer.from(ra.obs).equals(Buffer.from(rb.obs))).toBe(true);
      const sa = await a.step([2, 4]);
      const sb = await b.step([2, 4]);
      expect(Buffer.from(sa.obs).equals(Buffer.from(sb.obs))).toBe(true);
      expect(Array.from(sa.rewards)).toEqual(Array.from(sb.rewards));
    } finally {
      await a.close();
      await b.close();
    }
  }, 60_000);
});
