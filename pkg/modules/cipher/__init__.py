from modules.cipher.cipher_module import CipherModule
from modules.cipher.cipher_types import PgmKey
from modules.cipher.key_io import format_key, parse_key, read_key_file, write_key_file
from modules.cipher.pgm_cipher import decrypt, encrypt, key_from_signatures, keygen

__all__ = [
    'CipherModule',
    'PgmKey',
    'decrypt',
    'encrypt',
    'format_key',
    'key_from_signatures',
    'keygen',
    'parse_key',
    'read_key_file',
    'write_key_file',
]
