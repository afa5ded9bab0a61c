"""Word-level tokenizer with per-byte fallback for out-of-vocabulary words.

The vocabulary is a plain table mapping token string -> id plus a declared
end-of-text id. Two ways to get one:

* ``WordTokenizer.desk(words)`` builds the fixed desk layout
  (id 0 = eot, ids 1..256 = raw bytes, words from 257 up), which removes any
  external vocabulary dependency from tests.
* ``WordTokenizer.load(path)`` reads a saved table file.

Encoding splits text on whitespace. A word missing from the table is emitted
as its UTF-8 bytes via the byte-token block; adjacent byte-encoded words are
separated by the 0x20 byte so decoding recovers them exactly. Decoding joins
word pieces with single spaces, so ``decode(encode(x)) == x`` holds for any
text whose words are separated by single spaces.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

from textprov.errors import TokenizerError


class WordTokenizer:
    def __init__(self, vocab: dict[str, int], eot_id: int, byte_base: int | None = None):
        """``byte_base``: first of 256 consecutive ids used for byte fallback,
        or None to reject out-of-vocabulary words loudly."""
        if not vocab and byte_base is None:
            raise TokenizerError("empty vocabulary with no byte fallback")
        ids = list(vocab.values())
        if byte_base is not None:
            ids.extend(range(byte_base, byte_base + 256))
        ids.append(eot_id)
        if min(ids) < 0:
            raise TokenizerError("negative token id in vocabulary")
        if len(set(ids)) != len(ids):
            raise TokenizerError("overlapping ids in vocabulary table")
        for word in vocab:
            if not word or word.split() != [word]:
                raise TokenizerError(f"vocabulary word contains whitespace: {word!r}")
        self.vocab = dict(vocab)
        self.eot_id = eot_id
        self.byte_base = byte_base
        self.vocab_size = max(ids) + 1
        self._id_to_word = {i: w for w, i in self.vocab.items()}

    @classmethod
    def desk(cls, words: Iterable[str] = ()) -> "WordTokenizer":
        """Fixed desk layout: eot=0, bytes at 1..256, words from 257."""
        vocab = {}
        next_id = 257
        for w in words:
            if w not in vocab:
                vocab[w] = next_id
                next_id += 1
        return cls(vocab, eot_id=0, byte_base=1)

    def encode(self, text: str) -> list[int]:
        ids: list[int] = []
        prev_was_bytes = False
        for word in text.split():
            known = self.vocab.get(word)
            if known is not None:
                ids.append(known)
                prev_was_bytes = False
                continue
            if self.byte_base is None:
                raise TokenizerError(f"word not in vocabulary and no byte fallback: {word!r}")
            if prev_was_bytes:
                ids.append(self.byte_base + 0x20)
            ids.extend(self.byte_base + b for b in word.encode("utf-8"))
            prev_was_bytes = True
        return ids

    def decode(self, ids: Iterable[int]) -> str:
        pieces: list[str] = []
        buf = bytearray()

        def flush():
            if buf:
                pieces.append(buf.decode("utf-8", errors="replace"))
                buf.clear()

        for i in ids:
            i = int(i)
            if self.byte_base is not None and self.byte_base <= i < self.byte_base + 256:
                buf.append(i - self.byte_base)
            elif i == self.eot_id:
                flush()
            elif i in self._id_to_word:
                flush()
                pieces.append(self._id_to_word[i])
            else:
                raise TokenizerError(f"token id out of range: {i}")
        flush()
        return " ".join(pieces)

    def save(self, path: str | Path) -> None:
        lines = [f"#eot\t{self.eot_id}"]
        if self.byte_base is not None:
            lines.append(f"#bytes\t{self.byte_base}")
        lines.extend(f"{w}\t{i}" for w, i in sorted(self.vocab.items(), key=lambda kv: kv[1]))
        Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "WordTokenizer":
        vocab: dict[str, int] = {}
        eot_id: int | None = None
        byte_base: int | None = None
        for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
            if not line.strip():
                continue
            try:
                key, value = line.split("\t")
            except ValueError as e:
                raise TokenizerError(f"{path}:{lineno}: expected 'token<TAB>id'") from e
            if key == "#eot":
                eot_id = int(value)
            elif key == "#bytes":
                byte_base = int(value)
            elif key.startswith("#"):
                raise TokenizerError(f"{path}:{lineno}: unknown directive {key!r}")
            else:
                vocab[key] = int(value)
        if eot_id is None:
            raise TokenizerError(f"{path}: missing '#eot' directive")
        return cls(vocab, eot_id=eot_id, byte_base=byte_base)
