/** Shared test plumbing: a recording fetch fake and a manual debounce clock. */

import type { FetchLike } from '../src/api.js';

export interface RecordedCall {
  url: string;
  method: string;
  body: unknown;
}

export function jsonResponse(data: unknown, status = 200): Response {
  return new Response(JSON.stringify(data), {
    status,
    headers: { 'content-type': 'application/json' },
  });
}

interface Route {
  method: string;
  pattern: RegExp;
  respond: (call: RecordedCall) => Response;
}

/**
 * Minimal stand-in for the service: register routes, hand `fetch` to the
 * ApiClient, and assert on `calls` afterwards. Unmatched requests return
 * a 404 so a test that hits the wrong URL fails loudly.
 */
export class FakeService {
  readonly calls: RecordedCall[] = [];
  private readonly routes: Route[] = [];

  on(method: string, pattern: string | RegExp, data: unknown): this {
    const regex = typeof pattern === 'string'
      ? new RegExp(`^${pattern.replace(/[.*+?^${}()|[\]\\]/g, '\\$&')}$`)
      : pattern;
    const respond = typeof data === 'function'
      ? (data as (call: RecordedCall) => Response)
      : () => jsonResponse(data);
    this.routes.push({ method: method.toUpperCase(), pattern: regex, respond });
    return this;
  }

  readonly fetch: FetchLike = (url, init) => {
    const method = (init?.method ?? 'GET').toUpperCase();
    const body = typeof init?.body === 'string' ? JSON.parse(init.body) : undefined;
    const call: RecordedCall = { url, method, body };
    this.calls.push(call);
    for (const route of this.routes) {
      if (route.method === method && route.pattern.test(url)) {
        return Promise.resolve(route.respond(call));
      }
    }
    return Promise.resolve(jsonResponse({ detail: `no route for ${method} ${url}` }, 404));
  };

  callsTo(method: string, urlPart: string): RecordedCall[] {
    return this.calls.filter(
      (c) => c.method === method.toUpperCase() && c.url.includes(urlPart),
    );
  }
}

/** Deterministic scheduler for the debouncer: nothing runs until fire(). */
export class ManualClock {
  private pending = new Map<number, () => void>();
  private nextHandle = 1;

  readonly schedule = (fn: () => void, _ms: number): unknown => {
    const handle = this.nextHandle++;
    this.pending.set(handle, fn);
    return handle;
  };

  readonly cancel = (handle: unknown): void => {
    this.pending.delete(handle as number);
  };

  get pendingCount(): number {
    return this.pending.size;
  }

  fire(): void {
    const callbacks = [...this.pending.values()];
    this.pending.clear();
    for (const fn of callbacks) fn();
  }
}

/** Poll until the condition holds; bail out rather than hang forever. */
export async function waitUntil(condition: () => boolean, tries = 200): Promise<void> {
  for (let i = 0; i < tries; i++) {
    if (condition()) return;
    await new Promise((resolve) => setTimeout(resolve, 0));
  }
  throw new Error('condition never became true');
}
