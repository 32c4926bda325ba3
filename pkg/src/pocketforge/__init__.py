"""pocketforge: a casual-creator engine for single-page HTML artifacts.

Generate pages from a slot/tile grammar, edit them with undo/redo,
measure and playfully compare their size, and share them as files,
bookmarks, or URL permalinks.
"""

from .document import (
    Comment,
    Diagnostic,
    Document,
    Element,
    ParseResult,
    Text,
    parse_html,
    serialize,
    validate_document,
)
from .feedback import (
    Comparison,
    ReferencePage,
    SizeReport,
    compare,
    default_reference_pages,
    load_reference_pages,
    measure_size,
    render_feedback,
)
from .history import (
    ORIGIN_GENERATED,
    ORIGIN_RESTORED,
    ORIGIN_TYPED,
    EditorState,
    HistoryStack,
)
from .patterns import audit, default_manifest, load_manifest
from .share import (
    Bookmark,
    FileBookmarkStore,
    InMemoryBookmarkStore,
    Permalink,
    PermalinkDecodeError,
    StorageError,
    decode_permalink,
    encode_permalink,
    export_html,
)
from .tiles import (
    MAX_SEED,
    Slot,
    TileSet,
    TileSetError,
    choose_tiles,
    default_tileset,
    generate,
    load_tileset,
    possibility_space_size,
)

__version__ = "0.1.0"

__all__ = [
    "Bookmark",
    "Comment",
    "Comparison",
    "Diagnostic",
    "Document",
    "EditorState",
    "Element",
    "FileBookmarkStore",
    "HistoryStack",
    "InMemoryBookmarkStore",
    "MAX_SEED",
    "ORIGIN_GENERATED",
    "ORIGIN_RESTORED",
    "ORIGIN_TYPED",
    "ParseResult",
    "Permalink",
    "PermalinkDecodeError",
    "ReferencePage",
    "SizeReport",
    "Slot",
    "StorageError",
    "Text",
    "TileSet",
    "TileSetError",
    "audit",
    "choose_tiles",
    "compare",
    "decode_permalink",
    "default_manifest",
    "default_reference_pages",
    "default_tileset",
    "encode_permalink",
    "export_html",
    "generate",
    "load_manifest",
    "load_reference_pages",
    "load_tileset",
    "measure_size",
    "parse_html",
    "possibility_space_size",
    "render_feedback",
    "serialize",
    "validate_document",
    "__version__",
]
