/**
 * Typed client for the batched platformer environment.
 *
 * Each handle owns a worker process that runs the environment natively and
 * streams observations back as raw bytes over stdio. Calls on one handle
 * are serialized internally; observations arrive as zero-copy views over
 * the received buffer (contiguous row-major uint8, shape [N, H, W, 3]).
 */

import { spawn, ChildProcessWithoutNullStreams } from "node:child_process";
import * as path from "node:path";
import { fileURLToPath } from "node:url";

export interface MakeEnvOptions {
  /** YAML config path; omit for the built-in defaults. */
  configPath?: string;
  nEnvs: number;
  seed: number;
  /** Python interpreter running the environment package. */
  pythonBin?: string;
}

export interface ResetResult {
  obs: Uint8Array;
  shape: [number, number, number, number];
}

export interface StepInfo {
  distance: Float64Array;
  progress: Float64Array;
  success: Uint8Array;
  x: Float64Array;
  t: Float64Array;
}

export interface StepResult {
  obs: Uint8Array;
  shape: [number, number, number, number];
  rewards: Float64Array;
  terminated: Uint8Array;
  truncated: Uint8Array;
  info: StepInfo;
}

interface WireHeader {
  ok: boolean;
  error?: string;
  binary: number;
  shape?: number[];
  n_envs?: number;
  h?: number;
  w?: number;
  rewards?: number[];
  terminated?: number[];
  truncated?: number[];
  info?: {
    distance: number[];
    progress: number[];
    success: number[];
    x: number[];
    t: number[];
  };
}

interface WireResponse {
  header: WireHeader;
  binary: Buffer;
}

const WORKER_PATH = path.join(
  path.dirname(fileURLToPath(import.meta.url)),
  "..",
  "worker.py",
);

/** Reads newline-delimited JSON headers, each followed by `binary` bytes. */
class FrameReader {
  private pending = Buffer.alloc(0);
  private waiting: Array<{
    resolve: (r: WireResponse) => void;
    reject: (e: Error) => void;
  }> = [];
  private current: { header: WireHeader; need: number } | null = null;

  feed(chunk: Buffer): void {
    this.pending = Buffer.concat([this.pending, chunk]);
    this.drain();
  }

  fail(err: Error): void {
    const waiters = this.waiting;
    this.waiting = [];
    for (const w of waiters) w.reject(err);
  }

  next(): Promise<WireResponse> {
    return new Promise((resolve, reject) => {
      this.waiting.push({ resolve, reject });
      this.drain();
    });
  }

  private drain(): void {
    for (;;) {
      if (this.waiting.length === 0) return;
      if (this.current === null) {
        const nl = this.pending.indexOf(0x0a);
        if (nl < 0) return;
        const line = this.pending.subarray(0, nl).toString("utf-8");
        this.pending = this.pending.subarray(nl + 1);
        const header = JSON.parse(line) as WireHeader;
        this.current = { header, need: header.binary ?? 0 };
      }
      if (this.pending.length < this.current.need) return;
      const binary = Buffer.from(this.pending.subarray(0, this.current.need));
      this.pending = this.pending.subarray(this.current.need);
      const waiter = this.waiting.shift()!;
      const response = { header: this.current.header, binary };
      this.current = null;
      waiter.resolve(response);
    }
  }
}

export class EnvClosedError extends Error {
  constructor() {
    super("environment handle is closed");
    this.name = "EnvClosedError";
  }
}

export class EnvError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "EnvError";
  }
}

export class BoundEnv {
  readonly nEnvs: number;
  readonly h: number;
  readonly w: number;
  private proc: ChildProcessWithoutNullStreams;
  private reader: FrameReader;
  private queue: Promise<unknown> = Promise.resolve();
  private closed = false;

  private constructor(
    proc: ChildProcessWithoutNullStreams,
    reader: FrameReader,
    nEnvs: number,
    h: number,
    w: number,
  ) {
    this.proc = proc;
    this.reader = reader;
    this.nEnvs = nEnvs;
    this.h = h;
    this.w = w;
  }

  static async create(opts: MakeEnvOptions): Promise<BoundEnv> {
    if (!Number.isInteger(opts.nEnvs) || opts.nEnvs < 1) {
      throw new EnvError("nEnvs must be a positive integer");
    }
    const python = opts.pythonBin ?? "python3";
    const proc = spawn(python, [WORKER_PATH], {
      stdio: ["pipe", "pipe", "pipe"],
    });
    const reader = new FrameReader();
    proc.stdout.on("data", (chunk: Buffer) => reader.feed(chunk));
    let stderrTail = "";
    proc.stderr.on("data", (chunk: Buffer) => {
      stderrTail = (stderrTail + chunk.toString("utf-8")).slice(-4096);
    });
    proc.on("exit", (code) => {
      if (code !== 0) {
        reader.fail(new EnvError(`worker exited with ${code}: ${stderrTail}`));
      }
    });

    const pending = reader.next();
    proc.stdin.write(
      JSON.stringify({
        cmd: "make_env",
        config_path: opts.configPath ?? null,
        n_envs: opts.nEnvs,
        seed: opts.seed,
      }) + "\n",
    );
    const { header } = await pending;
    if (!header.ok) {
      proc.kill();
      throw new EnvError(header.error ?? "make_env failed");
    }
    return new BoundEnv(proc, reader, header.n_envs!, header.h!, header.w!);
  }

  private request(payload: object): Promise<WireResponse> {
    if (this.closed) return Promise.reject(new EnvClosedError());
    const run = this.queue.then(() => {
      const pending = this.reader.next();
      this.proc.stdin.write(JSON.stringify(payload) + "\n");
      return pending;
    });
    this.queue = run.catch(() => undefined);
    return run;
  }

  async reset(): Promise<ResetResult> {
    const { header, binary } = await this.request({ cmd: "reset" });
    if (!header.ok) throw new EnvError(header.error ?? "reset failed");
    return {
      obs: new Uint8Array(binary.buffer, binary.byteOffset, binary.length),
      shape: header.shape as [number, number, number, number],
    };
  }

  async step(actions: ArrayLike<number>): Promise<StepResult> {
    const arr = Array.from(actions, (a) => Number(a));
    if (arr.length !== this.nEnvs) {
      throw new EnvError(`need ${this.nEnvs} actions, got ${arr.length}`);
    }
    for (const a of arr) {
      if (!Number.isInteger(a) || a < 0 || a > 7) {
        throw new EnvError(`action ${a} outside [0, 7]`);
      }
    }
    const { header, binary } = await this.request({ cmd: "step", actions: arr });
    if (!header.ok) throw new EnvError(header.error ?? "step failed");
    return {
      obs: new Uint8Array(binary.buffer, binary.byteOffset, binary.length),
      shape: header.shape as [number, number, number, number],
      rewards: Float64Array.from(header.rewards!),
      terminated: Uint8Array.from(header.terminated!),
      truncated: Uint8Array.from(header.truncated!),
      info: {
        distance: Float64Array.from(header.info!.distance),
        progress: Float64Array.from(header.info!.progress),
        success: Uint8Array.from(header.info!.success),
        x: Float64Array.from(header.info!.x),
        t: Float64Array.from(header.info!.t),
      },
    };
  }

  async close(): Promise<void> {
    if (this.closed) return;
    this.closed = true;
    try {
      const pending = this.reader.next();
      this.proc.stdin.write(JSON.stringify({ cmd: "close" }) + "\n");
      await pending;
    } catch {
      // worker may already be gone; killing below is enough
    }
    this.proc.kill();
  }
}

export function makeEnv(opts: MakeEnvOptions): Promise<BoundEnv> {
  return BoundEnv.create(opts);
}
