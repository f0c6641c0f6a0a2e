"""
Domain Exceptions
Erros do domínio de normalização, motor de transdutores e modelo de linguagem
"""


class TextNormError(Exception):
    """Base para todos os erros do domínio"""


# Motor de transdutores

class EmptyClassError(TextNormError, ValueError):
    """char_class chamado sem nenhum intervalo"""


class NotAcceptorError(TextNormError, ValueError):
    """Operando com arco de entrada diferente da saída onde um aceitador é exigido"""


class InvalidRuleError(TextNormError, ValueError):
    """Regra de reescrita mal formada (tau vazio, aceita a string vazia, etc.)"""


class AmbiguousRuleError(TextNormError):
    """A regra compilada não é funcional sobre sigma*"""


class NoPathError(TextNormError):
    """A string não pertence à linguagem de entrada do transdutor"""


class NonFunctionalError(TextNormError):
    """Mais de uma saída distinta para a mesma entrada"""


# Pipeline de normalização e perfis

class InvalidUtf8Error(TextNormError, ValueError):
    """Bytes de entrada que não são UTF-8 válido"""


class ProfileError(TextNormError, ValueError):
    """Perfil de idioma inexistente ou inválido"""


# Corpus e modelo de linguagem

class EmptyCorpusError(TextNormError, ValueError):
    """Corpus sem nenhuma sentença"""


class EmptyTrainingError(TextNormError, ValueError):
    """Partição de treino vazia"""


class EmptyTestError(TextNormError, ValueError):
    """Partição de teste vazia"""


class EmptyAfterFilteringError(TextNormError):
    """Nenhuma sentença sobreviveu à filtragem"""


class MalformedConlluError(TextNormError):
    """Bloco CoNLL-U sem comentário '# text ='"""


class MalformedLineError(TextNormError):
    """Linha de arquivo de frequências fora do formato"""


class DegenerateSplitWarning(UserWarning):
    """Partição treino/teste com um dos lados vazio"""
