#!/usr/bin/env node
// SMT-LIB v2 stdio frontend for the z3 WASM build shipped by the `z3-solver`
// npm package. Behaves like `z3 -in -smt2`: reads commands from stdin,
// evaluates them in a persistent context, writes replies to stdout.
//
// Accepts and ignores z3-style flags (-in, -smt2); `key=value` arguments are
// applied as (set-option :key value) before any input is processed, matching
// the native binary's CLI parameter syntax.

'use strict';

const path = require('path');

function resolveZ3Module() {
  try {
    return require('z3-solver');
  } catch (e) {
    // Fall back to a node_modules directory next to this script.
    return require(path.join(__dirname, 'node_modules', 'z3-solver'));
  }
}

// Splits a stream of SMT-LIB text into complete top-level commands.
// Handles ;-comments, "string" literals ("" escape) and |quoted symbols|.
class CommandSplitter {
  constructor() {
    this.buf = '';
    this.depth = 0;
    this.mode = 'normal'; // normal | string | quoted | comment
    this.pending = [];
    this.current = '';
  }

  feed(chunk) {
    for (const ch of chunk) {
      this.current += ch;
      switch (this.mode) {
        case 'comment':
          if (ch === '\n') this.mode = 'normal';
          break;
        case 'string':
          if (ch === '"') this.mode = 'stringQuote';
          break;
        case 'stringQuote': // saw a '"' inside a string: "" is an escape
          this.mode = ch === '"' ? 'string' : 'normal';
          if (this.mode === 'normal') this.onNormal(ch);
          break;
        case 'quoted':
          if (ch === '|') this.mode = 'normal';
          break;
        default:
          this.onNormal(ch);
      }
      if (this.mode === 'normal' && this.depth === 0 && this.current.trim().length > 0 && ch === ')') {
        this.pending.push(this.current);
        this.current = '';
      }
    }
    const out = this.pending;
    this.pending = [];
    return out;
  }

  onNormal(ch) {
    if (ch === ';') this.mode = 'comment';
    else if (ch === '"') this.mode = 'string';
    else if (ch === '|') this.mode = 'quoted';
    else if (ch === '(') this.depth++;
    else if (ch === ')') this.depth = Math.max(0, this.depth - 1);
  }
}

async function main() {
  const { init } = resolveZ3Module();
  const { Z3 } = await init();
  const cfg = Z3.mk_config();
  const ctx = Z3.mk_context(cfg);

  const prelude = [];
  for (const arg of process.argv.slice(2)) {
    const m = /^([A-Za-z0-9_.:-]+)=(.*)$/.exec(arg);
    if (m) prelude.push(`(set-option :${m[1]} ${m[2]})`);
    // flags like -in / -smt2 are ignored
  }
  if (prelude.length > 0) {
    try {
      await Z3.eval_smtlib2_string(ctx, prelude.join(''));
    } catch (e) {
      /* option errors are not fatal, same as the native CLI */
    }
  }

  const splitter = new CommandSplitter();
  let queue = Promise.resolve();
  let exiting = false;

  const runCommand = (cmd) => {
    queue = queue.then(async () => {
      if (exiting) return;
      if (/^\s*\(\s*exit\s*\)\s*$/.test(cmd)) {
        exiting = true;
        process.stdout.write('', () => process.exit(0));
        return;
      }
      let out;
      try {
        out = await Z3.eval_smtlib2_string(ctx, cmd);
      } catch (e) {
        out = `(error "${String(e && e.message ? e.message : e).replace(/"/g, "'")}")\n`;
      }
      if (out && out.length > 0) process.stdout.write(out);
    });
    return queue;
  };

  process.stdin.setEncoding('utf8');
  process.stdin.on('data', (chunk) => {
    for (const cmd of splitter.feed(chunk)) runCommand(cmd);
  });
  process.stdin.on('end', () => {
    queue.then(() => process.exit(0));
  });
}

main().catch((e) => {
  process.stderr.write(`z3proc: fatal: ${e}\n`);
  process.exit(3);
});
